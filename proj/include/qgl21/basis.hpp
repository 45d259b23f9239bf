#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "qgl21/rational.hpp"

namespace qgl21 {

/// Ordered triple of weight labels [m1, m2, m3]. The first two form the
/// gl(2) row and must satisfy dominance: m1 - m2 a nonnegative integer. The
/// third is the gl(1) label and may be any rational.
struct Signature {
  Rational m1, m2, m3;

  bool dominant() const { return is_nonneg_integer(m1 - m2); }
  bool operator==(const Signature&) const = default;
};

/// One reduced-basis vector: the global signature row, the local signature
/// row of the even-subalgebra block that contains it, the two free bottom
/// labels and the block index k in {0,1,2,3}. The bottom-center slot of the
/// triangular pattern carries no degree of freedom and is not stored.
struct GZPattern {
  Signature global;
  Signature local;
  Rational m11;
  Rational m31;  // always equals local.m3
  int k = 0;

  bool operator==(const GZPattern&) const = default;
};

/// The enumerated reduced basis of one induced module: the four even blocks
/// concatenated in block order k = 0..3, each block ordered by decreasing
/// m11. The k = 2 block is empty when the gl(2) row is one-dimensional; it is
/// kept as a zero-length block so block indexing stays uniform.
struct ModuleBasis {
  Signature global;
  std::vector<GZPattern> patterns;
  std::array<std::size_t, 4> block_offsets{};
  std::array<std::size_t, 4> block_sizes{};

  std::size_t dimension() const { return patterns.size(); }
  const GZPattern& at(std::size_t i) const { return patterns.at(i); }
};

/// Local signatures of the even-subalgebra blocks V_0..V_3 as (k, signature)
/// pairs. The k = 2 entry is omitted when m1 = m2 (its gl(2) row would
/// violate dominance; the block is empty).
std::vector<std::pair<int, Signature>> local_signatures(const Signature& global);

/// All patterns of one block, m11 descending from local.m1 to local.m2.
std::vector<GZPattern> enumerate_block(const Signature& global, const Signature& local, int k);

ModuleBasis module_basis(const Signature& global);

/// The pattern of the block with m11 = local.m1 (annihilated by the even
/// raising generator).
GZPattern highest_weight_pattern(const Signature& global, const Signature& local, int k);

/// Position of a pattern in the enumeration; throws std::out_of_range if the
/// pattern does not belong to the basis (an out-of-module matrix element,
/// which is a bug in the caller).
std::size_t index_of(const GZPattern& pattern, const ModuleBasis& basis);

/// Same lookup by (k, m11) without constructing a full pattern.
std::size_t index_of(int k, const Rational& m11, const ModuleBasis& basis);

}  // namespace qgl21
