#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl21/rep.hpp"
#include "support/induced_oracle.hpp"

using namespace qgl21;

namespace {

Signature sig(long long a, long long b, long long c) {
  return {Rational(a), Rational(b), Rational(c)};
}

template <class S>
double diff(const Matrix<S>& a, const Matrix<S>& b) {
  return scalar_to_double((a - b).max_abs());
}

std::array<Real, 3> ones(const Field<Real>& f) { return {f.one(), f.one(), f.one()}; }

}  // namespace

TEST_CASE("shifted labels") {
  GZPattern p;
  p.global = sig(2, 1, 0);
  p.local = {2, 1, 0};
  p.m11 = 2;
  p.m31 = 0;
  LValues l = l_values(p);
  CHECK(l.l13 == Rational(1));
  CHECK(l.l23 == Rational(-1));
  CHECK(l.l33 == Rational(-1));
  CHECK(l.l == Rational(1, 2));
}

TEST_CASE("even action on patterns") {
  auto P = Params<double>::make(1.3, 0.7, 53);
  Signature g = sig(1, 0, 0);
  auto b = module_basis(g);

  // raising kills the top of each block
  for (int k = 0; k < 4; ++k) {
    if (b.block_sizes[static_cast<std::size_t>(k)] == 0) continue;
    const GZPattern& hw = b.patterns[b.block_offsets[static_cast<std::size_t>(k)]];
    CHECK(even_action(EvenGen::E12, hw, P).empty());
  }
  // E11 eigenvalue is the bottom label itself
  for (const auto& p : b.patterns) {
    auto terms = even_action(EvenGen::E11, p, P);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].second == doctest::Approx(scalar_to_double(
              Field<double>(53).from_rational(p.m11))));
  }
  // both brackets are [1] on the lower k=0 pattern, for any parameters
  for (auto [pp, qq] : {std::pair{2.0, 3.0}, {0.6, 1.9}, {1.31, 1.31}}) {
    auto Q = Params<double>::make(pp, qq, 53);
    const GZPattern& low = b.patterns[1];  // k=0, m11=0
    auto terms = even_action(EvenGen::E12, low, Q);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].second == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("lowering chain normalization inverts the one-step composition") {
  auto P = Params<double>::make(2, 3, 53);
  Signature g = sig(3, 1, -2);
  auto ls = local_signatures(g);
  for (auto& [k, row] : ls) {
    GZPattern hw = highest_weight_pattern(g, row, k);
    long width = static_cast<long>(as_integer(row.m1 - row.m2));
    auto [same, one] = lowering_chain(hw, 0, P);
    CHECK(same == hw);
    CHECK(one == 1.0);
    GZPattern cur = hw;
    double chain = 1.0;
    for (long s = 1; s <= width; ++s) {
      auto terms = even_action(EvenGen::E21, cur, P);
      REQUIRE(terms.size() == 1);
      chain *= terms[0].second;
      cur = terms[0].first;
      auto [target, coeff] = lowering_chain(hw, s, P);
      CHECK(target == cur);
      CHECK(coeff * chain == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(lowering_chain(hw, width + 1, P), std::invalid_argument);
  }
}

TEST_CASE("structural zeros: diagonality and block grading are exact") {
  Field<Real> f(128);
  auto P = Params<Real>::make("1.7", "0.6", 128);
  auto rep = build_representation(sig(2, 1, 0), P, ones(f));
  const auto& b = rep.basis;
  const std::size_t n = rep.dimension();
  for (auto name : {"E11", "E22", "E33", "L"}) {
    const auto& m = rep.generator(name);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(m.at(i, j).is_zero());
  }
  auto block = [&](std::size_t i) { return b.patterns[i].k; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (block(i) != block(j)) {
        CHECK(rep.e12.at(i, j).is_zero());
        CHECK(rep.e21.at(i, j).is_zero());
      }
      bool e23_ok = (block(i) == 0 && (block(j) == 1 || block(j) == 2)) ||
                    ((block(i) == 1 || block(i) == 2) && block(j) == 3);
      if (!e23_ok) {
        CHECK(rep.e23.at(i, j).is_zero());
        CHECK(rep.e13.at(i, j).is_zero());
      }
      bool e32_ok = (block(j) == 0 && (block(i) == 1 || block(i) == 2)) ||
                    ((block(j) == 1 || block(j) == 2) && block(i) == 3);
      if (!e32_ok) {
        CHECK(rep.e32.at(i, j).is_zero());
        CHECK(rep.e31.at(i, j).is_zero());
      }
    }
  // the odd raising generator annihilates the whole top block
  for (std::size_t j = 0; j < b.block_sizes[0]; ++j)
    for (std::size_t i = 0; i < n; ++i) CHECK(rep.e23.at(i, j).is_zero());
}

TEST_CASE("Cartan eigenvalues on block tops equal the local row") {
  Field<Real> f(128);
  auto P = Params<Real>::make("2", "3", 128);
  auto rep = build_representation(sig(2, 1, 0), P, ones(f));
  const auto& b = rep.basis;
  const Rational lshift[4] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(0)};
  Rational l = (b.global.m1 - b.global.m2) / 2;
  for (int k = 0; k < 4; ++k) {
    auto ku = static_cast<std::size_t>(k);
    if (b.block_sizes[ku] == 0) continue;
    std::size_t hw = b.block_offsets[ku];
    const Signature& row = b.patterns[hw].local;
    CHECK(rep.e11.at(hw, hw) == f.from_rational(row.m1));
    CHECK(rep.e22.at(hw, hw) == f.from_rational(row.m2));
    CHECK(rep.e33.at(hw, hw) == f.from_rational(row.m3));
    for (std::size_t i = 0; i < b.block_sizes[ku]; ++i) {
      std::size_t at = hw + i;
      CHECK(rep.ell.at(at, at) == f.from_rational(l + lshift[k]));
    }
  }
  // eigenvalues on the block-1 top of [2,1,0] are (2, 0, 1)
  std::size_t h1 = b.block_offsets[1];
  CHECK(rep.e11.at(h1, h1) == f.from_long(2));
  CHECK(rep.e22.at(h1, h1) == f.from_long(0));
  CHECK(rep.e33.at(h1, h1) == f.from_long(1));
}

TEST_CASE("E33 trace matches the block shift table") {
  Field<Real> f(128);
  auto P = Params<Real>::make("1.9", "0.7", 128);
  for (auto g : {sig(2, 1, 0), sig(3, 0, -2), sig(0, 0, 4)}) {
    auto rep = build_representation(g, P, ones(f));
    Real tr = f.zero();
    for (std::size_t i = 0; i < rep.dimension(); ++i) tr += rep.e33.at(i, i);
    const long shift[4] = {0, 1, 1, 2};
    Rational expect = g.m3 * Rational(static_cast<long long>(rep.dimension()));
    for (int k = 0; k < 4; ++k)
      expect += Rational(static_cast<long long>(rep.basis.block_sizes[static_cast<std::size_t>(k)]) *
                         shift[k]);
    CHECK(abs(tr - f.from_rational(expect)).to_double() < 1e-30);
  }
}

TEST_CASE("odd action shapes") {
  Field<Real> f(128);
  auto P = Params<Real>::make("2", "3", 128);
  std::array<Real, 3> a = ones(f);
  Signature g = sig(1, 1, 5);  // l = 0
  auto b = module_basis(g);
  for (const auto& p : b.patterns) {
    if (p.k == 0) CHECK(odd_action_e23(p, P, a).empty());
    if (p.k == 3) {
      CHECK(odd_action_e32(p, P, a).empty());
      auto terms = odd_action_e23(p, P, a);
      REQUIRE(terms.size() == 1);  // the middle block is absent at l = 0
      CHECK(terms[0].first.k == 1);
    }
    if (p.k == 0) {
      auto terms = odd_action_e32(p, P, a);
      REQUIRE(terms.size() == 1);
      CHECK(terms[0].first.k == 1);
    }
  }
}

TEST_CASE("basis transforms are mutually inverse") {
  Field<Real> f(128);
  auto P = Params<Real>::make("1.3", "0.8", 128);
  std::array<Real, 3> a{f.from_decimal("0.7"), f.from_decimal("2.1"), f.from_decimal("1.4")};
  for (auto g : {sig(1, 0, 0), sig(2, 1, 0), sig(3, 1, -2), sig(0, 0, 7),
                 Signature{Rational(2), Rational(0), Rational(1, 3)}}) {
    auto t = basis_transform(g, P, a, TransformDirection::ReducedToInduced);
    auto ti = basis_transform(g, P, a, TransformDirection::InducedToReduced);
    auto eye = Matrix<Real>::identity(module_basis(g).dimension(), f);
    CHECK(scalar_to_double((ti * t - eye).max_abs()) < 1e-30);
    CHECK(scalar_to_double((t * ti - eye).max_abs()) < 1e-30);
  }
}

TEST_CASE("odd matrices agree with the induced-basis oracle") {
  Field<Real> f(128);
  std::mt19937_64 rng(42);
  auto unit = [&] { return (rng() >> 11) * 0x1.0p-53; };
  for (auto g : {sig(1, 0, 0), sig(2, 1, 0), sig(3, 1, -2),
                 Signature{Rational(2), Rational(0), Rational(1, 3)}}) {
    for (int trial = 0; trial < 3; ++trial) {
      double pv = 0.5 + 1.5 * unit(), qv = 0.5 + 1.5 * unit();
      if (std::abs(pv * qv - 1.0) < 0.05) continue;
      auto P = Params<Real>::make(pv, qv, 128);
      std::array<Real, 3> a{f.from_decimal(Field<double>::to_decimal(0.1 + 3 * unit())),
                            f.from_decimal(Field<double>::to_decimal(0.1 + 3 * unit())),
                            f.from_decimal(Field<double>::to_decimal(0.1 + 3 * unit()))};
      auto rep = build_representation(g, P, a);
      auto e23 = oracle::reduced_from_induced(oracle::induced_e23(g, P), g, P, a);
      auto e32 = oracle::reduced_from_induced(oracle::induced_e32(g, P), g, P, a);
      CHECK(diff(rep.e23, e23) < 1e-25);
      CHECK(diff(rep.e32, e32) < 1e-25);
    }
  }
}

TEST_CASE("classical limit of the generator matrices") {
  Field<Real> f(128);
  auto near1 = Params<Real>::make("1.000001", "1.000001", 128);
  for (auto g : {sig(1, 0, 0), sig(2, 1, 0), sig(2, 0, -1)}) {
    auto deformed = build_representation(g, near1, ones(f));
    auto classical = classical_representation(g, ones(f), 128u);
    for (auto name : ReprMatrices<Real>::generator_names)
      CHECK(diff(deformed.generator(name), classical.generator(name)) < 1e-4);
  }
  // classical even entries are plain square roots of integer products; the
  // width-3 chain of block 1 (row [2,0]) steps with sqrt(1*2), sqrt(2*1)
  auto cl = classical_representation(sig(2, 1, 0), ones(f), 128u);
  std::size_t h1 = cl.basis.block_offsets[1];
  CHECK(scalar_to_double(cl.e12.at(h1, h1 + 1)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-20));
  CHECK(scalar_to_double(cl.e12.at(h1 + 1, h1 + 2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-20));
}

TEST_CASE("gauge covariance in the free constants") {
  Field<Real> f(128);
  auto P = Params<Real>::make("2", "3", 128);
  Signature g = sig(2, 1, 0);
  auto base = build_representation(g, P, ones(f));
  Real two = f.from_long(2);
  auto scaled = build_representation(g, P, {two, f.one(), f.one()});
  const auto& b = base.basis;
  // E23 matrix elements from block 1 into block 0 scale by a1
  for (std::size_t j = b.block_offsets[1]; j < b.block_offsets[1] + b.block_sizes[1]; ++j)
    for (std::size_t i = 0; i < b.block_sizes[0]; ++i)
      CHECK(scalar_to_double(abs(scaled.e23.at(i, j) - two * base.e23.at(i, j))) < 1e-30);
  // diagonal generators are unchanged
  for (auto name : {"E11", "E22", "E33", "L"})
    CHECK(diff(scaled.generator(name), base.generator(name)) == 0.0);
}

TEST_CASE("degenerate and invalid builds") {
  Field<Real> f(128);
  auto P = Params<Real>::make("2", "3", 128);
  auto rep = build_representation(sig(0, 0, 0), P, ones(f));
  CHECK(rep.dimension() == 4);
  // blocks 0, 2 and 3 are at most one-dimensional; only the width-2 chain of
  // block 1 carries the even raising/lowering action
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      bool block1 = rep.basis.patterns[i].k == 1 && rep.basis.patterns[j].k == 1;
      if (!block1) {
        CHECK(rep.e12.at(i, j).is_zero());
        CHECK(rep.e21.at(i, j).is_zero());
      }
    }
  std::size_t b1 = rep.basis.block_offsets[1];
  CHECK(scalar_to_double(rep.e21.at(b1 + 1, b1)) == doctest::Approx(1.0));

  // stored composites coincide with recomputing them from the four Chevalley
  // matrices
  auto [e13, e31] = composite_odd(rep);
  CHECK(scalar_to_double((e13 - rep.e13).max_abs()) == 0.0);
  CHECK(scalar_to_double((e31 - rep.e31).max_abs()) == 0.0);
  CHECK_THROWS_AS(build_representation(sig(1, 0, 0), P, {f.zero(), f.one(), f.one()}),
                  std::invalid_argument);
}
