#include "qgl21/basis.hpp"

#include <stdexcept>

namespace qgl21 {

namespace {

// Local rows of the four even blocks. Applying the two odd lowering
// generators shifts the gl(2) x gl(1) weight by (0,-1,+1) and (-1,0,+1), so
// the blocks sit at these signatures relative to the global row.
Signature local_row(const Signature& g, int k) {
  switch (k) {
    case 0: return {g.m1, g.m2, g.m3};
    case 1: return {g.m1, g.m2 - 1, g.m3 + 1};
    case 2: return {g.m1 - 1, g.m2, g.m3 + 1};
    case 3: return {g.m1 - 1, g.m2 - 1, g.m3 + 2};
    default: throw std::invalid_argument("block index must be 0..3");
  }
}

void require_dominant(const Signature& s, const char* what) {
  if (!s.dominant())
    throw std::invalid_argument(std::string(what) +
                                ": signature [" + to_string(s.m1) + "," + to_string(s.m2) +
                                "," + to_string(s.m3) + "] is not dominant");
}

}  // namespace

std::vector<std::pair<int, Signature>> local_signatures(const Signature& global) {
  require_dominant(global, "local_signatures");
  std::vector<std::pair<int, Signature>> out;
  for (int k = 0; k < 4; ++k) {
    Signature row = local_row(global, k);
    if (k == 2 && global.m1 == global.m2) continue;  // empty block, row not dominant
    out.emplace_back(k, row);
  }
  return out;
}

std::vector<GZPattern> enumerate_block(const Signature& global, const Signature& local, int k) {
  require_dominant(local, "enumerate_block");
  std::vector<GZPattern> out;
  long long steps = as_integer(local.m1 - local.m2);
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long long j = 0; j <= steps; ++j) {
    GZPattern p;
    p.global = global;
    p.local = local;
    p.m11 = local.m1 - j;  // decreasing: highest weight first
    p.m31 = local.m3;
    p.k = k;
    out.push_back(std::move(p));
  }
  return out;
}

ModuleBasis module_basis(const Signature& global) {
  require_dominant(global, "module_basis");
  ModuleBasis basis;
  basis.global = global;
  for (int k = 0; k < 4; ++k) {
    basis.block_offsets[static_cast<std::size_t>(k)] = basis.patterns.size();
    Signature row = local_row(global, k);
    if (k == 2 && global.m1 == global.m2) {
      basis.block_sizes[2] = 0;
      continue;
    }
    auto block = enumerate_block(global, row, k);
    basis.block_sizes[static_cast<std::size_t>(k)] = block.size();
    basis.patterns.insert(basis.patterns.end(), block.begin(), block.end());
  }
  return basis;
}

GZPattern highest_weight_pattern(const Signature& global, const Signature& local, int k) {
  require_dominant(local, "highest_weight_pattern");
  GZPattern p;
  p.global = global;
  p.local = local;
  p.m11 = local.m1;
  p.m31 = local.m3;
  p.k = k;
  return p;
}

std::size_t index_of(int k, const Rational& m11, const ModuleBasis& basis) {
  if (k < 0 || k > 3) throw std::out_of_range("index_of: block index out of range");
  Signature row = local_row(basis.global, k);
  Rational depth = row.m1 - m11;
  if (!is_nonneg_integer(depth) || !is_nonneg_integer(m11 - row.m2))
    throw std::out_of_range("index_of: m11 outside block");
  std::size_t at = basis.block_offsets[static_cast<std::size_t>(k)] +
                   static_cast<std::size_t>(depth.numerator());
  if (at >= basis.patterns.size() ||
      static_cast<std::size_t>(depth.numerator()) >= basis.block_sizes[static_cast<std::size_t>(k)])
    throw std::out_of_range("index_of: pattern not in basis");
  return at;
}

std::size_t index_of(const GZPattern& pattern, const ModuleBasis& basis) {
  std::size_t at = index_of(pattern.k, pattern.m11, basis);
  if (!(basis.patterns[at] == pattern))
    throw std::out_of_range("index_of: pattern does not match the enumerated basis");
  return at;
}

}  // namespace qgl21
