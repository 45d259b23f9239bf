#pragma once

#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qgl21/atypical.hpp"
#include "qgl21/rep.hpp"

namespace qgl21 {

struct ReportEntry {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool gating = true;  // informational entries never fail the report
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  std::string classification;
  std::size_t dimension = 0;
  double wall_time_ms = 0.0;

  bool passed() const {
    for (const auto& e : entries)
      if (e.gating && !e.pass) return false;
    return true;
  }

  const ReportEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  void print(std::ostream& os) const;
};

struct VerifyOptions {
  double tolerance = kDefaultToleranceHighPrec;
  bool relations = true;   // defining relations and Serre relations
  bool structure = true;   // block grading, highest-weight and eigenvalue tables
  bool cyclicity = true;   // generated-span and invariant-subspace analysis
  bool classical = true;   // comparison against the non-deformed construction
};

namespace detail {

template <class S>
S norm_floor(const Matrix<S>& m, const Field<S>& f) {
  S n = m.max_abs();
  S one = f.one();
  return n > one ? n : one;
}

/// max|D| / max(1, scale): relative residual of a difference matrix.
template <class S>
double rel_residual(const Matrix<S>& diff, const S& scale, const Field<S>& f) {
  S s = scale > f.one() ? scale : f.one();
  return scalar_to_double(diff.max_abs() / s);
}

inline void push(std::vector<ReportEntry>& out, std::string id, double residual, double tol,
                 bool gating = true) {
  out.push_back({std::move(id), residual, tol, residual <= tol || !gating, gating});
}

}  // namespace detail

/// Residuals of the commutators with the Cartan generators and with L.
template <class S>
std::vector<ReportEntry> check_cartan(const ReprMatrices<S>& rep, double tol) {
  Field<S> f = rep.params.field();
  std::vector<ReportEntry> out;
  const Matrix<S>* cartan[3] = {&rep.e11, &rep.e22, &rep.e33};

  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Matrix<S> d = commutator(*cartan[i], *cartan[j], f);
      worst = std::max(worst, detail::rel_residual(d, f.one(), f));
    }
  detail::push(out, "cartan-commute", worst, tol);

  auto weight_check = [&](const Matrix<S>& x, int wi1, int wi2, int wi3, const char* id) {
    int w[3] = {wi1, wi2, wi3};
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
      Matrix<S> rhs = x.scaled(f.from_long(w[i]));
      Matrix<S> d = commutator(*cartan[i], x, f) - rhs;
      S scale = detail::norm_floor(x, f) * detail::norm_floor(*cartan[i], f);
      r = std::max(r, detail::rel_residual(d, scale, f));
    }
    detail::push(out, id, r, tol);
  };
  // weights of the simple raising/lowering generators under ad(E_ii)
  weight_check(rep.e12, 1, -1, 0, "cartan-grades-e12");
  weight_check(rep.e23, 0, 1, -1, "cartan-grades-e23");
  weight_check(rep.e21, -1, 1, 0, "cartan-grades-e21");
  weight_check(rep.e32, 0, -1, 1, "cartan-grades-e32");

  double lworst = 0.0;
  for (const Matrix<S>* x : {&rep.e12, &rep.e21, &rep.e11, &rep.e22, &rep.e33}) {
    Matrix<S> d = commutator(rep.ell, *x, f);
    S scale = detail::norm_floor(*x, f) * detail::norm_floor(rep.ell, f);
    lworst = std::max(lworst, detail::rel_residual(d, scale, f));
  }
  detail::push(out, "L-commutes-with-even", lworst, tol);

  // L against the odd generators has no closed commutator; report only.
  for (auto [x, id] : {std::pair{&rep.e23, "L-e23-commutator-info"},
                       std::pair{&rep.e32, "L-e32-commutator-info"}}) {
    Matrix<S> d = commutator(rep.ell, *x, f);
    S scale = detail::norm_floor(*x, f) * detail::norm_floor(rep.ell, f);
    detail::push(out, id, detail::rel_residual(d, scale, f), tol, /*gating=*/false);
  }
  return out;
}

/// The two deformed relations closing the Chevalley pairs: the gl(2)
/// commutator [E12,E21] and the odd anticommutator {E23,E32}, with the
/// diagonal right sides evaluated per basis vector through the quantum
/// bracket.
template <class S>
std::vector<ReportEntry> check_deformed(const ReprMatrices<S>& rep, double tol) {
  Field<S> f = rep.params.field();
  std::vector<ReportEntry> out;
  const std::size_t n = rep.dimension();
  S two = f.from_long(2);

  Matrix<S> rhs1 = Matrix<S>::zeros(n, f);
  Matrix<S> rhs2 = Matrix<S>::zeros(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    S h1 = rep.e11.at(i, i) - rep.e22.at(i, i);
    S h2 = rep.e22.at(i, i) + rep.e33.at(i, i);
    S expo1 = rep.ell.at(i, i) - h1 / two;
    rhs1.at(i, i) = ratio_pow_scalar(expo1, rep.params) * bracket_scalar(h1, rep.params);
    rhs2.at(i, i) = ratio_pow_scalar(-h2, rep.params) * bracket_scalar(h2, rep.params);
  }

  Matrix<S> d1 = commutator(rep.e12, rep.e21, f) - rhs1;
  S scale1 = detail::norm_floor(rep.e12, f) * detail::norm_floor(rep.e21, f);
  S r1n = detail::norm_floor(rhs1, f);
  if (r1n > scale1) scale1 = r1n;
  detail::push(out, "chevalley-h1-commutator", detail::rel_residual(d1, scale1, f), tol);

  Matrix<S> d2 = anticommutator(rep.e23, rep.e32) - rhs2;
  S scale2 = detail::norm_floor(rep.e23, f) * detail::norm_floor(rep.e32, f);
  S r2n = detail::norm_floor(rhs2, f);
  if (r2n > scale2) scale2 = r2n;
  detail::push(out, "chevalley-h2-anticommutator", detail::rel_residual(d2, scale2, f), tol);
  return out;
}

/// Vanishing squares of the four odd generators and the two mixed deformed
/// Serre relations.
template <class S>
std::vector<ReportEntry> check_serre(const ReprMatrices<S>& rep, double tol) {
  Field<S> f = rep.params.field();
  std::vector<ReportEntry> out;
  auto square_zero = [&](const Matrix<S>& x, const char* id) {
    S nx = detail::norm_floor(x, f);
    detail::push(out, id, detail::rel_residual(x * x, nx * nx, f), tol);
  };
  square_zero(rep.e23, "serre-e23-squared");
  square_zero(rep.e32, "serre-e32-squared");
  square_zero(rep.e13, "serre-e13-squared");
  square_zero(rep.e31, "serre-e31-squared");

  Matrix<S> dp = r_commutator(rep.e12, rep.e13, rep.params.p);
  S sp = detail::norm_floor(rep.e12, f) * detail::norm_floor(rep.e13, f) *
         (f.one() + abs(rep.params.p));
  detail::push(out, "serre-mixed-p", detail::rel_residual(dp, sp, f), tol);

  Matrix<S> dq = r_commutator(rep.e21, rep.e31, rep.params.q);
  S sq = detail::norm_floor(rep.e21, f) * detail::norm_floor(rep.e31, f) *
         (f.one() + abs(rep.params.q));
  detail::push(out, "serre-mixed-q", detail::rel_residual(dq, sq, f), tol);
  return out;
}

namespace detail {

inline bool block_pair_allowed(std::string_view name, int kr, int kc) {
  if (name == "E11" || name == "E22" || name == "E33" || name == "L" || name == "E12" ||
      name == "E21")
    return kr == kc;
  if (name == "E23" || name == "E13")
    return (kr == 0 && (kc == 1 || kc == 2)) || ((kr == 1 || kr == 2) && kc == 3);
  return (kc == 0 && (kr == 1 || kr == 2)) || ((kc == 1 || kc == 2) && kr == 3);
}

inline int block_of(const ModuleBasis& b, std::size_t i) { return b.patterns[i].k; }

}  // namespace detail

/// Structural checks: diagonality of the Cartan generators, the block
/// grading of every generator, annihilation properties of the highest-weight
/// vectors and the eigenvalue tables.
template <class S>
std::vector<ReportEntry> check_highest_weight(const ReprMatrices<S>& rep, double tol) {
  Field<S> f = rep.params.field();
  std::vector<ReportEntry> out;
  const ModuleBasis& b = rep.basis;
  const std::size_t n = b.dimension();

  double grading = 0.0;
  for (auto name : ReprMatrices<S>::generator_names) {
    const Matrix<S>& m = rep.generator(name);
    bool diag = name == "E11" || name == "E22" || name == "E33" || name == "L";
    S scale = detail::norm_floor(m, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (diag ? i == j : detail::block_pair_allowed(name, detail::block_of(b, i), detail::block_of(b, j)))
          continue;
        grading = std::max(grading, scalar_to_double(abs(m.at(i, j)) / scale));
      }
  }
  detail::push(out, "block-grading", grading, tol);

  double e23block0 = 0.0;
  S s23 = detail::norm_floor(rep.e23, f);
  for (std::size_t j = 0; j < n; ++j) {
    if (detail::block_of(b, j) != 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      e23block0 = std::max(e23block0, scalar_to_double(abs(rep.e23.at(i, j)) / s23));
  }
  detail::push(out, "e23-annihilates-block0", e23block0, tol);

  double hwkill = 0.0, hweig = 0.0, ltable = 0.0;
  S s12 = detail::norm_floor(rep.e12, f);
  Rational l = (b.global.m1 - b.global.m2) / 2;
  const Rational lshift[4] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(0)};
  for (int k = 0; k < 4; ++k) {
    auto ku = static_cast<std::size_t>(k);
    if (b.block_sizes[ku] == 0) continue;
    std::size_t hw = b.block_offsets[ku];
    for (std::size_t i = 0; i < n; ++i)
      hwkill = std::max(hwkill, scalar_to_double(abs(rep.e12.at(i, hw)) / s12));
    const Signature& row = b.patterns[hw].local;
    auto eig_resid = [&](const Matrix<S>& m, const Rational& expect) {
      S e = f.from_rational(expect);
      S scale = abs(e) > f.one() ? abs(e) : f.one();
      return scalar_to_double(abs(m.at(hw, hw) - e) / scale);
    };
    hweig = std::max({hweig, eig_resid(rep.e11, row.m1), eig_resid(rep.e22, row.m2),
                      eig_resid(rep.e33, row.m3)});
    for (std::size_t i = 0; i < b.block_sizes[ku]; ++i)
      ltable = std::max(ltable, eig_resid(rep.ell, l + lshift[k]));
  }
  detail::push(out, "e12-kills-block-tops", hwkill, tol);
  detail::push(out, "hw-cartan-eigenvalues", hweig, tol);
  detail::push(out, "L-block-values", ltable, tol);
  return out;
}

/// Orthogonal closure of repeated generator applications to a start vector.
/// The collected raw image vectors are ranked by singular values with the
/// cutoff tol * sigma_max.
template <class S>
std::size_t generated_span_rank(const ReprMatrices<S>& rep, std::size_t start, double tol) {
  Field<S> f = rep.params.field();
  const std::size_t n = rep.dimension();
  const Matrix<S>* gens[10] = {&rep.e11, &rep.e22, &rep.e33, &rep.e12, &rep.e21,
                               &rep.e23, &rep.e32, &rep.e13, &rep.e31, &rep.ell};
  std::vector<std::vector<S>> ortho, raw, frontier;
  std::vector<S> seed(n, f.zero());
  seed[start] = f.one();
  raw.push_back(seed);
  ortho.push_back(seed);
  frontier.push_back(seed);
  // Acceptance cutoff for genuinely new directions: far above rounding noise
  // (~2^-prec) yet far below any structural amplitude.
  double loose = std::pow(2.0, -(2.0 / 3.0) * static_cast<double>(f.precision));
  double gscale = 1.0;
  for (const auto* g : gens)
    gscale = std::max(gscale, scalar_to_double(g->max_abs()));

  while (!frontier.empty() && ortho.size() < n) {
    std::vector<std::vector<S>> next;
    for (const auto* g : gens)
      for (const auto& v : frontier) {
        std::vector<S> w = g->apply(v);
        S wn = sqrt(dot(w, w));
        // images that are rounding residue of structural zeros carry no
        // direction information
        if (scalar_to_double(wn) <= loose * gscale) continue;
        std::vector<S> r = w;
        for (int pass = 0; pass < 2; ++pass)  // re-orthogonalize once
          for (const auto& q : ortho) {
            S c = dot(q, r);
            for (std::size_t i = 0; i < n; ++i) r[i] -= c * q[i];
          }
        S rn = sqrt(dot(r, r));
        if (scalar_to_double(rn / wn) <= loose) continue;
        raw.push_back(w);
        for (auto& x : r) x = x / rn;
        ortho.push_back(r);
        next.push_back(std::move(r));
        if (ortho.size() >= n) break;
      }
    frontier = std::move(next);
  }

  Matrix<S> span(n, raw.size(), f.zero());
  for (std::size_t j = 0; j < raw.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) span.at(i, j) = raw[j][i];
  return rank_by_singular_values(span, f, tol);
}

/// Span analysis. Induced modules are cyclic from the global highest-weight
/// vector, so the span from index 0 always fills the module; the invariant
/// subspace of a nontypical full module is reached from the highest vector of
/// block 3 instead, and its columns must not leak outside the subspace.
template <class S>
std::vector<ReportEntry> check_cyclicity(const ReprMatrices<S>& rep, double tol) {
  Field<S> f = rep.params.field();
  std::vector<ReportEntry> out;
  const std::size_t dim = rep.dimension();

  std::size_t span0 = generated_span_rank(rep, 0, tol);
  out.push_back({"cyclic-span-from-top", static_cast<double>(span0), static_cast<double>(dim),
                 span0 == dim, true});

  Classification c = classify(rep.basis.global);
  if (rep.kind != RepKind::Full || c.kind == TypicalityKind::Typical) {
    if (rep.kind == RepKind::Full && rep.basis.block_sizes[3] > 0) {
      std::size_t span3 = generated_span_rank(rep, rep.basis.block_offsets[3], tol);
      ReportEntry e{"invariant-subspace-span", static_cast<double>(span3),
                    static_cast<double>(dim), span3 == dim, true};
      out.push_back(e);  // typical: no proper invariant subspace exists
    }
    return out;
  }

  std::vector<std::size_t> inv = invariant_subspace(c, rep.basis);
  std::vector<bool> in_inv(dim, false);
  for (std::size_t i : inv) in_inv[i] = true;

  double leak = 0.0;
  for (auto name : ReprMatrices<S>::generator_names) {
    const Matrix<S>& m = rep.generator(name);
    S scale = detail::norm_floor(m, f);
    for (std::size_t j : inv)
      for (std::size_t i = 0; i < dim; ++i)
        if (!in_inv[i]) leak = std::max(leak, scalar_to_double(abs(m.at(i, j)) / scale));
  }
  detail::push(out, "invariant-subspace-closure", leak, tol);

  std::size_t span3 = generated_span_rank(rep, rep.basis.block_offsets[3], tol);
  ReportEntry e{"invariant-subspace-span", static_cast<double>(span3),
                static_cast<double>(inv.size()), span3 == inv.size() && span3 < dim, true};
  out.push_back(e);
  return out;
}

/// Builds the module at p = q = 1 + 1e-6 and compares every generator matrix
/// against the non-deformed construction; the limit must agree entrywise to
/// 1e-4.
template <class S>
std::vector<ReportEntry> check_classical_limit(const Signature& global, const std::array<S, 3>& a,
                                               unsigned precision_bits, RepKind kind) {
  std::vector<ReportEntry> out;
  Params<S> near_one = Params<S>::make("1.000001", "1.000001", precision_bits);
  ReprMatrices<S> deformed = build_representation(global, near_one, a);
  ReprMatrices<S> classical = classical_representation(global, a, precision_bits);
  if (kind != RepKind::Full) {
    Classification c = classify(global);
    deformed = quotient_representation(deformed, c);
    classical = quotient_representation(classical, c);
  }
  double worst = 0.0;
  for (auto name : ReprMatrices<S>::generator_names) {
    Matrix<S> d = deformed.generator(name) - classical.generator(name);
    worst = std::max(worst, scalar_to_double(d.max_abs()));
  }
  detail::push(out, "classical-limit", worst, 1e-4);
  return out;
}

template <class S>
VerificationReport verify_representation(const ReprMatrices<S>& rep, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.dimension = rep.dimension();
  Classification c = classify(rep.basis.global);
  report.classification = std::string(typicality_name(c.kind)) + " (" + to_string(c.factor1) +
                          ", " + to_string(c.factor2) + "), " +
                          std::string(rep_kind_name(rep.kind));
  auto absorb = [&](std::vector<ReportEntry> es) {
    for (auto& e : es) report.entries.push_back(std::move(e));
  };
  if (opt.relations) {
    absorb(check_cartan(rep, opt.tolerance));
    absorb(check_deformed(rep, opt.tolerance));
    absorb(check_serre(rep, opt.tolerance));
  }
  if (opt.structure) absorb(check_highest_weight(rep, opt.tolerance));
  if (opt.cyclicity) absorb(check_cyclicity(rep, opt.tolerance));
  if (opt.classical)
    absorb(check_classical_limit(rep.basis.global, rep.a, rep.params.precision, rep.kind));
  auto t1 = std::chrono::steady_clock::now();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

template <class S>
VerificationReport verify_representation(const ReprMatrices<S>& rep) {
  VerifyOptions opt;
  opt.tolerance = rep.params.tolerance;
  return verify_representation(rep, opt);
}

inline void VerificationReport::print(std::ostream& os) const {
  os << "relation\tresidual\ttolerance\tstatus\n";
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%.3e\t%.3e", e.residual, e.tolerance);
    os << e.id << "\t" << buf << "\t"
       << (e.gating ? (e.pass ? "PASS" : "FAIL") : "INFO") << "\n";
  }
  os << "classification\t" << classification << "\n";
  os << "dimension\t" << dimension << "\n";
  os << "result\t" << (passed() ? "PASS" : "FAIL") << "\twall_ms\t" << wall_time_ms << "\n";
}

}  // namespace qgl21
