#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "qgl21/basis.hpp"
#include "qgl21/matrix.hpp"
#include "qgl21/qnum.hpp"

namespace qgl21 {

/// Shifted labels l_ij = m_ij - (i - 2*delta_{i,3}); the row index 3 is
/// shifted by -1 instead of -3. l = (m13 - m23)/2 is the gl(2) spin of the
/// top row.
struct LValues {
  Rational l11, l12, l22, l13, l23, l33, l31;
  Rational l;
};

inline LValues l_values(const GZPattern& p) {
  LValues out;
  out.l11 = p.m11 - 1;
  out.l12 = p.local.m1 - 1;
  out.l22 = p.local.m2 - 2;
  out.l13 = p.global.m1 - 1;
  out.l23 = p.global.m2 - 2;
  out.l33 = p.global.m3 - 1;
  out.l31 = p.m31 - 1;
  out.l = (p.global.m1 - p.global.m2) / 2;
  return out;
}

/// Formula evaluator. The deformed mode evaluates quantum brackets and the
/// (p/q)-power prefactors at the given parameters; the classical mode is the
/// p,q -> 1 limit ([x] -> x, every parameter power -> 1), which realizes the
/// non-deformed superalgebra with the same formula skeleton.
template <class S>
struct Eval {
  Params<S> params;
  Field<S> f;
  bool classical = false;

  static Eval deformed(const Params<S>& p) { return Eval{p, p.field(), false}; }
  static Eval classical_at(unsigned precision_bits) {
    Field<S> fld(precision_bits);
    Params<S> nominal{fld.one(), fld.one(), precision_bits, default_tolerance(precision_bits)};
    return Eval{nominal, fld, true};
  }

  S qb(const Rational& x) const { return classical ? f.from_rational(x) : bracket(x, params); }
  S pqr(const Rational& x) const { return classical ? f.one() : pq_pow(x, params); }
  S ppow(long e) const { return classical ? f.one() : pow_int(params.p, e); }
  S qpow(long e) const { return classical ? f.one() : pow_int(params.q, e); }
};

enum class RepKind { Full, QuotientClass1, QuotientClass2 };

inline std::string_view rep_kind_name(RepKind k) {
  switch (k) {
    case RepKind::Full: return "full";
    case RepKind::QuotientClass1: return "quotient-class1";
    case RepKind::QuotientClass2: return "quotient-class2";
  }
  return "full";
}

/// The ten generator matrices over the scalar field, indexed by the
/// enumerated basis: entry (row, col) is the coefficient of the row basis
/// vector in the image of the column basis vector, so operator composition is
/// the ordinary matrix product.
template <class S>
struct ReprMatrices {
  ModuleBasis basis;
  Params<S> params;
  std::array<S, 3> a;
  RepKind kind = RepKind::Full;

  Matrix<S> e11, e22, e33, e12, e21, e23, e32, e13, e31, ell;

  static constexpr std::array<std::string_view, 10> generator_names = {
      "E11", "E22", "E33", "E12", "E21", "E23", "E32", "E13", "E31", "L"};

  const Matrix<S>& generator(std::string_view name) const {
    if (name == "E11") return e11;
    if (name == "E22") return e22;
    if (name == "E33") return e33;
    if (name == "E12") return e12;
    if (name == "E21") return e21;
    if (name == "E23") return e23;
    if (name == "E32") return e32;
    if (name == "E13") return e13;
    if (name == "E31") return e31;
    if (name == "L") return ell;
    throw std::invalid_argument("unknown generator: " + std::string(name));
  }
  Matrix<S>& generator(std::string_view name) {
    return const_cast<Matrix<S>&>(std::as_const(*this).generator(name));
  }

  std::size_t dimension() const { return basis.dimension(); }
};

enum class EvenGen { E11, E22, E33, E12, E21, L };

/// Eigenvalues of the diagonal generators on one pattern.
inline Rational cartan_eigenvalue(EvenGen g, const GZPattern& p) {
  switch (g) {
    case EvenGen::E11: return p.m11;
    case EvenGen::E22: return p.local.m1 + p.local.m2 - p.m11;
    case EvenGen::E33: return p.m31;
    case EvenGen::L: return (p.local.m1 - p.local.m2) / 2;
    default: throw std::invalid_argument("not a diagonal generator");
  }
}

namespace detail {

template <class S>
using ActionTerms = std::vector<std::pair<GZPattern, S>>;

template <class S>
ActionTerms<S> even_action_impl(EvenGen g, const GZPattern& p, const Eval<S>& ev) {
  ActionTerms<S> out;
  switch (g) {
    case EvenGen::E11:
    case EvenGen::E22:
    case EvenGen::E33:
    case EvenGen::L:
      out.emplace_back(p, ev.f.from_rational(cartan_eigenvalue(g, p)));
      return out;
    case EvenGen::E12: {
      Rational up = p.local.m1 - p.m11;       // steps left to the top
      Rational down = p.m11 - p.local.m2 + 1;
      if (up == 0) return out;  // highest weight of the block
      GZPattern t = p;
      t.m11 = p.m11 + 1;
      out.emplace_back(t, sqrt(ev.qb(up) * ev.qb(down)));
      return out;
    }
    case EvenGen::E21: {
      Rational up = p.local.m1 - p.m11 + 1;
      Rational down = p.m11 - p.local.m2;
      if (down == 0) return out;  // lowest weight of the block
      GZPattern t = p;
      t.m11 = p.m11 - 1;
      out.emplace_back(t, sqrt(ev.qb(up) * ev.qb(down)));
      return out;
    }
  }
  return out;
}

// Shared bracket arguments of the odd matrix elements, all exact rationals.
struct OddArgs {
  Rational A;     // l11 - l23 = m11 - m23 + 1
  Rational B;     // l13 - l11 = m13 - m11
  Rational twol;  // m13 - m23
  Rational u;     // l23 + l33 + 3 = m23 + m33
  Rational v;     // l13 + l33 + 3 = m13 + m33 + 1
};

inline OddArgs odd_args(const GZPattern& p) {
  const Signature& g = p.global;
  OddArgs o;
  o.A = p.m11 - g.m2 + 1;
  o.B = g.m1 - p.m11;
  o.twol = g.m1 - g.m2;
  o.u = g.m2 + g.m3;
  o.v = g.m1 + g.m3 + 1;
  return o;
}

inline GZPattern shifted_pattern(const GZPattern& src, int k, const Rational& m11) {
  Signature row;
  const Signature& g = src.global;
  switch (k) {
    case 0: row = {g.m1, g.m2, g.m3}; break;
    case 1: row = {g.m1, g.m2 - 1, g.m3 + 1}; break;
    case 2: row = {g.m1 - 1, g.m2, g.m3 + 1}; break;
    case 3: row = {g.m1 - 1, g.m2 - 1, g.m3 + 2}; break;
    default: throw std::invalid_argument("bad block index");
  }
  GZPattern t;
  t.global = g;
  t.local = row;
  t.m11 = m11;
  t.m31 = row.m3;
  t.k = k;
  return t;
}

/// Matrix elements of the odd raising generator on the reduced basis. The
/// target pattern keeps m11 and moves to the block whose local row differs by
/// the generator's weight (+e2 - e3). Coefficients with a vanishing bracket
/// are exact zeros and the corresponding out-of-block targets are dropped.
template <class S>
ActionTerms<S> odd_e23_impl(const GZPattern& p, const std::array<S, 3>& a, const Eval<S>& ev) {
  ActionTerms<S> out;
  OddArgs o = odd_args(p);
  switch (p.k) {
    case 0:
      return out;  // annihilates the top block
    case 1:
      if (o.A != 0)
        out.emplace_back(shifted_pattern(p, 0, p.m11),
                         a[0] * ev.pqr(o.u) * sqrt(ev.qb(o.A) / ev.qb(o.twol + 1)) * ev.qb(o.u));
      return out;
    case 2:
      out.emplace_back(shifted_pattern(p, 0, p.m11),
                       a[1] * ev.pqr(o.u + 1) * sqrt(ev.qb(o.B) / ev.qb(o.twol)) * ev.qb(o.v));
      return out;
    case 3: {
      // The block-3 chain is kept in the gl(2)-normalized gauge (the plain
      // doubly-lowered induced chain picks up q/p per descent step, which
      // would break the q-Serre relation against the standard even action),
      // so the ratio prefactor here is (p/q)^{l23+l33+3} as in the k=1 line.
      S front = a[2] * ev.pqr(o.u);
      if (o.B != 0)
        out.emplace_back(shifted_pattern(p, 1, p.m11),
                         front * (ev.f.one() / (a[0] * ev.params.q)) *
                             sqrt(ev.qb(o.B) / ev.qb(o.twol + 1)) * ev.qb(o.v));
      if (o.A != 0 && o.twol != 0)
        out.emplace_back(shifted_pattern(p, 2, p.m11),
                         -(front * (ev.f.one() / (a[1] * ev.params.p)) *
                           sqrt(ev.qb(o.A) * ev.qb(o.twol)) * ev.qb(o.u) / ev.qb(o.twol + 1)));
      return out;
    }
    default:
      throw std::invalid_argument("bad block index");
  }
}

template <class S>
ActionTerms<S> odd_e32_impl(const GZPattern& p, const std::array<S, 3>& a, const Eval<S>& ev) {
  ActionTerms<S> out;
  OddArgs o = odd_args(p);
  switch (p.k) {
    case 0:
      out.emplace_back(shifted_pattern(p, 1, p.m11),
                       (ev.f.one() / a[0]) * sqrt(ev.qb(o.A) / ev.qb(o.twol + 1)));
      if (o.B != 0 && o.twol != 0)
        out.emplace_back(shifted_pattern(p, 2, p.m11),
                         (ev.f.one() / a[1]) * ev.pqr(o.B - 1) *
                             sqrt(ev.qb(o.B) * ev.qb(o.twol)) / ev.qb(o.twol + 1));
      return out;
    case 1:
      if (o.B != 0)
        out.emplace_back(shifted_pattern(p, 3, p.m11),
                         (a[0] / a[2]) * ev.params.p * ev.pqr(o.B - 1) *
                             sqrt(ev.qb(o.B) / ev.qb(o.twol + 1)));
      return out;
    case 2:
      out.emplace_back(shifted_pattern(p, 3, p.m11),
                       -((a[1] / a[2]) * ev.params.p * sqrt(ev.qb(o.A) / ev.qb(o.twol))));
      return out;
    case 3:
      return out;  // annihilates the bottom block
    default:
      throw std::invalid_argument("bad block index");
  }
}

template <class S>
void require_nonzero_constants(const std::array<S, 3>& a) {
  for (const auto& c : a)
    if (scalar_is_zero(c))
      throw std::invalid_argument("the free constants a1, a2, a3 must be nonzero");
}

template <class S>
ReprMatrices<S> build_impl(const Signature& global, const std::array<S, 3>& a, const Eval<S>& ev) {
  require_nonzero_constants(a);
  ReprMatrices<S> rep;
  rep.basis = module_basis(global);
  rep.params = ev.params;
  rep.a = a;
  rep.kind = RepKind::Full;
  const std::size_t n = rep.basis.dimension();
  for (auto name : ReprMatrices<S>::generator_names)
    rep.generator(name) = Matrix<S>::zeros(n, ev.f);

  for (std::size_t j = 0; j < n; ++j) {
    const GZPattern& p = rep.basis.at(j);
    for (auto [gen, mat] : {std::pair{EvenGen::E11, &rep.e11}, {EvenGen::E22, &rep.e22},
                            {EvenGen::E33, &rep.e33}, {EvenGen::E12, &rep.e12},
                            {EvenGen::E21, &rep.e21}, {EvenGen::L, &rep.ell}})
      for (auto& [target, coeff] : even_action_impl(gen, p, ev))
        mat->at(index_of(target, rep.basis), j) += coeff;
    for (auto& [target, coeff] : odd_e23_impl(p, a, ev))
      rep.e23.at(index_of(target, rep.basis), j) += coeff;
    for (auto& [target, coeff] : odd_e32_impl(p, a, ev))
      rep.e32.at(index_of(target, rep.basis), j) += coeff;
  }

  // composite odd generators E13 = [E12,E23]_{1/q}, E31 = -[E21,E32]_{1/p}
  S qinv = ev.classical ? ev.f.one() : pow_int(ev.params.q, -1);
  S pinv = ev.classical ? ev.f.one() : pow_int(ev.params.p, -1);
  rep.e13 = r_commutator(rep.e12, rep.e23, qinv);
  rep.e31 = r_commutator(rep.e21, rep.e32, pinv).scaled(-ev.f.one());
  return rep;
}

}  // namespace detail

template <class S>
std::vector<std::pair<GZPattern, S>> even_action(EvenGen g, const GZPattern& p,
                                                 const Params<S>& params) {
  return detail::even_action_impl(g, p, Eval<S>::deformed(params));
}

template <class S>
std::vector<std::pair<GZPattern, S>> odd_action_e23(const GZPattern& p, const Params<S>& params,
                                                    const std::array<S, 3>& a) {
  return detail::odd_e23_impl(p, a, Eval<S>::deformed(params));
}

template <class S>
std::vector<std::pair<GZPattern, S>> odd_action_e32(const GZPattern& p, const Params<S>& params,
                                                    const std::array<S, 3>& a) {
  return detail::odd_e32_impl(p, a, Eval<S>::deformed(params));
}

/// Normalization of the descent (E21)^steps from a block's highest-weight
/// pattern: the pattern `steps` below the top together with the coefficient
/// ([m11-m22]! / ([m12-m22]! [m12-m11]!))^{1/2}. Composing the one-step E21
/// action `steps` times from the top multiplies the unit vector by exactly
/// the inverse of this coefficient.
template <class S>
std::pair<GZPattern, S> lowering_chain(const GZPattern& local_hw, long steps,
                                       const Params<S>& params) {
  if (local_hw.m11 != local_hw.local.m1)
    throw std::invalid_argument("lowering_chain expects a highest-weight pattern");
  Rational width = local_hw.local.m1 - local_hw.local.m2;
  if (steps < 0 || Rational(steps) > width)
    throw std::invalid_argument("lowering_chain: steps out of range");
  GZPattern target = local_hw;
  target.m11 = local_hw.m11 - steps;
  S coeff = sqrt(bracket_factorial(target.m11 - local_hw.local.m2, params) /
                 (bracket_factorial(width, params) * bracket_factorial(Rational(steps), params)));
  return {target, coeff};
}

/// Assembles all ten generator matrices on module_basis(global).
template <class S>
ReprMatrices<S> build_representation(const Signature& global, const Params<S>& params,
                                     const std::array<S, 3>& a) {
  params.validate();
  return detail::build_impl(global, a, Eval<S>::deformed(params));
}

template <class S>
ReprMatrices<S> build_representation(const Signature& global, const Params<S>& params) {
  Field<S> f = params.field();
  return build_representation(global, params, {f.one(), f.one(), f.one()});
}

/// The non-deformed construction: identical formula skeleton evaluated in the
/// p,q -> 1 limit. Used as the oracle for the classical-limit check.
template <class S>
ReprMatrices<S> classical_representation(const Signature& global, const std::array<S, 3>& a,
                                         unsigned precision_bits) {
  return detail::build_impl(global, a, Eval<S>::classical_at(precision_bits));
}

template <class S>
std::pair<Matrix<S>, Matrix<S>> composite_odd(const ReprMatrices<S>& rep) {
  S qinv = pow_int(rep.params.q, -1);
  S pinv = pow_int(rep.params.p, -1);
  Field<S> f = rep.params.field();
  return {r_commutator(rep.e12, rep.e23, qinv),
          r_commutator(rep.e21, rep.e32, pinv).scaled(-f.one())};
}

// ---------------------------------------------------------------------------
// Change of basis between the reduced basis and the induced basis
// (E31)^t1 (E32)^t2 (x) v. Induced ordering: the four (t1,t2) groups
// (0,0),(0,1),(1,0),(1,1), each running over the top-block labels n from
// m13 down to m23.
// ---------------------------------------------------------------------------

enum class TransformDirection { ReducedToInduced, InducedToReduced };

inline std::size_t induced_index(int group, const Rational& n, const Signature& g) {
  Rational depth = g.m1 - n;
  long long width = as_integer(g.m1 - g.m2) + 1;
  long long d = as_integer(depth);
  if (d < 0 || d >= width) throw std::out_of_range("induced label outside the top block");
  return static_cast<std::size_t>(group) * static_cast<std::size_t>(width) +
         static_cast<std::size_t>(d);
}

template <class S>
Matrix<S> basis_transform(const Signature& global, const Params<S>& params,
                          const std::array<S, 3>& a, TransformDirection dir) {
  params.validate();
  detail::require_nonzero_constants(a);
  Eval<S> ev = Eval<S>::deformed(params);
  ModuleBasis basis = module_basis(global);
  const std::size_t n = basis.dimension();
  Matrix<S> t = Matrix<S>::zeros(n, ev.f);
  const Rational g1 = global.m1, g2 = global.m2;
  const Rational twol = g1 - g2;

  if (dir == TransformDirection::ReducedToInduced) {
    // columns: reduced pattern expanded over induced vectors
    for (std::size_t j = 0; j < n; ++j) {
      const GZPattern& p = basis.at(j);
      detail::OddArgs o = detail::odd_args(p);
      switch (p.k) {
        case 0:
          t.at(induced_index(0, p.m11, global), j) = ev.f.one();
          break;
        case 1:
          if (o.B != 0)
            t.at(induced_index(2, p.m11 + 1, global), j) =
                -(a[0] * sqrt(ev.qb(o.B) / ev.qb(twol + 1)));
          if (o.A != 0)
            t.at(induced_index(1, p.m11, global), j) =
                a[0] * ev.ppow(static_cast<long>(as_integer(p.m11 - g1))) *
                sqrt(ev.qb(o.A) / ev.qb(twol + 1));
          break;
        case 2:
          t.at(induced_index(2, p.m11 + 1, global), j) =
              a[1] * ev.pqr(1 - o.B) * sqrt(ev.qb(o.A) / ev.qb(twol));
          t.at(induced_index(1, p.m11, global), j) =
              a[1] * ev.qpow(static_cast<long>(as_integer(twol))) *
              ev.ppow(static_cast<long>(as_integer(p.m11 - g1 + 1))) *
              sqrt(ev.qb(o.B) / ev.qb(twol));
          break;
        case 3:
          // gl(2)-normalized block-3 chain: (q/p)^{m13 - m11 - 1} against the
          // plain doubly-lowered induced vector
          t.at(induced_index(3, p.m11 + 1, global), j) = a[2] * ev.pqr(1 - o.B);
          break;
      }
    }
    return t;
  }

  // columns: induced vector expanded over reduced patterns
  long long width = as_integer(twol) + 1;
  for (int group = 0; group < 4; ++group)
    for (long long d = 0; d < width; ++d) {
      Rational nlab = g1 - d;
      std::size_t j = induced_index(group, nlab, global);
      switch (group) {
        case 0:
          t.at(index_of(0, nlab, basis), j) = ev.f.one();
          break;
        case 1: {  // |0,1; n>
          Rational an = nlab - g2 + 1, bn = g1 - nlab;
          t.at(index_of(1, nlab, basis), j) =
              (ev.f.one() / a[0]) * sqrt(ev.qb(an) / ev.qb(twol + 1));
          if (bn != 0 && twol != 0)
            t.at(index_of(2, nlab, basis), j) =
                (ev.f.one() / a[1]) * ev.pqr(bn - 1) * sqrt(ev.qb(bn) * ev.qb(twol)) / ev.qb(twol + 1);
          break;
        }
        case 2: {  // |1,0; n>
          t.at(index_of(1, nlab - 1, basis), j) =
              -((ev.f.one() / a[0]) * ev.qpow(static_cast<long>(as_integer(nlab - g2))) *
                sqrt(ev.qb(g1 - nlab + 1) / ev.qb(twol + 1)));
          if (nlab != g2 && twol != 0)
            t.at(index_of(2, nlab - 1, basis), j) =
                (ev.f.one() / a[1]) * ev.ppow(-1) *
                ev.qpow(static_cast<long>(as_integer(nlab - g1))) *
                sqrt(ev.qb(nlab - g2) * ev.qb(twol)) / ev.qb(twol + 1);
          break;
        }
        case 3:
          t.at(index_of(3, nlab - 1, basis), j) = (ev.f.one() / a[2]) * ev.pqr(g1 - nlab);
          break;
      }
    }
  return t;
}

}  // namespace qgl21
