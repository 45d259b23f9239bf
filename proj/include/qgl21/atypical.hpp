#pragma once

#include <vector>

#include "qgl21/rep.hpp"

namespace qgl21 {

enum class TypicalityKind { Typical, Class1, Class2 };

inline std::string_view typicality_name(TypicalityKind k) {
  switch (k) {
    case TypicalityKind::Typical: return "Typical";
    case TypicalityKind::Class1: return "Class1";
    case TypicalityKind::Class2: return "Class2";
  }
  return "Typical";
}

/// Typicality data of a module. The two factors are the shifted-label sums
/// l13+l33+3 = m13+m33+1 and l23+l33+3 = m23+m33 whose quantum brackets
/// multiply the odd matrix elements; at generic parameters a bracket vanishes
/// exactly when its argument does, so the decision is made on the exact
/// rational factors.
struct Classification {
  TypicalityKind kind = TypicalityKind::Typical;
  Rational factor1;  // m13 + m33 + 1
  Rational factor2;  // m23 + m33
};

inline Classification classify(const Signature& global) {
  if (!global.dominant()) throw std::invalid_argument("classify: signature not dominant");
  Classification c;
  c.factor1 = global.m1 + global.m3 + 1;
  c.factor2 = global.m2 + global.m3;
  if (c.factor1 == 0 && c.factor2 == 0)
    throw std::logic_error("both typicality factors vanish; impossible for dominant signatures");
  if (c.factor1 == 0)
    c.kind = TypicalityKind::Class1;
  else if (c.factor2 == 0)
    c.kind = TypicalityKind::Class2;
  else
    c.kind = TypicalityKind::Typical;
  return c;
}

/// Basis indices of the maximal invariant subspace of a nontypical full
/// module: blocks 3 and 2 for class 1, blocks 3 and 1 for class 2. Always
/// contains block 3 and never meets block 0.
inline std::vector<std::size_t> invariant_subspace(const Classification& c,
                                                   const ModuleBasis& basis) {
  if (c.kind == TypicalityKind::Typical)
    throw std::invalid_argument("invariant_subspace: typical modules have none");
  int other = c.kind == TypicalityKind::Class1 ? 2 : 1;
  std::vector<std::size_t> out;
  for (int k : {other, 3}) {
    std::size_t off = basis.block_offsets[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < basis.block_sizes[static_cast<std::size_t>(k)]; ++i)
      out.push_back(off + i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline ModuleBasis quotient_basis(const ModuleBasis& full, TypicalityKind kind) {
  int dropped = kind == TypicalityKind::Class1 ? 2 : 1;
  ModuleBasis out;
  out.global = full.global;
  for (int k = 0; k < 4; ++k) {
    auto ku = static_cast<std::size_t>(k);
    out.block_offsets[ku] = out.patterns.size();
    if (k == dropped || k == 3) {
      out.block_sizes[ku] = 0;
      continue;
    }
    out.block_sizes[ku] = full.block_sizes[ku];
    for (std::size_t i = 0; i < full.block_sizes[ku]; ++i)
      out.patterns.push_back(full.patterns[full.block_offsets[ku] + i]);
  }
  return out;
}

}  // namespace detail

/// Irreducible quotient by the invariant subspace: rows and columns of the
/// invariant indices are deleted from every generator matrix (vectors of the
/// subspace are replaced by zero). Dimension 4l+3 for class 1, 4l+1 for
/// class 2.
template <class S>
ReprMatrices<S> quotient_representation(const ReprMatrices<S>& rep, const Classification& c) {
  if (rep.kind != RepKind::Full)
    throw std::invalid_argument("quotient_representation expects a full module");
  Classification actual = classify(rep.basis.global);
  if (actual.kind != c.kind || c.kind == TypicalityKind::Typical)
    throw std::invalid_argument("quotient_representation: classification mismatch");
  std::vector<std::size_t> dropped = invariant_subspace(c, rep.basis);
  ReprMatrices<S> out;
  out.basis = detail::quotient_basis(rep.basis, c.kind);
  out.params = rep.params;
  out.a = rep.a;
  out.kind = c.kind == TypicalityKind::Class1 ? RepKind::QuotientClass1 : RepKind::QuotientClass2;
  for (auto name : ReprMatrices<S>::generator_names)
    out.generator(name) = rep.generator(name).without(dropped);
  return out;
}

/// The same quotient assembled directly from the closed-form matrix elements
/// obtained by substituting the vanishing typicality factor into the odd
/// action. Kept as an independent route; equality with the deletion route is
/// a gating test.
template <class S>
ReprMatrices<S> quotient_closed_form(const Signature& global, const Params<S>& params,
                                     const std::array<S, 3>& a, const Classification& c) {
  params.validate();
  detail::require_nonzero_constants(a);
  if (c.kind == TypicalityKind::Typical)
    throw std::invalid_argument("quotient_closed_form: typical module");
  if (!(classify(global).kind == c.kind))
    throw std::invalid_argument("quotient_closed_form: classification mismatch");
  Eval<S> ev = Eval<S>::deformed(params);
  ReprMatrices<S> rep;
  rep.basis = detail::quotient_basis(module_basis(global), c.kind);
  rep.params = params;
  rep.a = a;
  rep.kind = c.kind == TypicalityKind::Class1 ? RepKind::QuotientClass1 : RepKind::QuotientClass2;
  const std::size_t n = rep.basis.dimension();
  for (auto name : ReprMatrices<S>::generator_names)
    rep.generator(name) = Matrix<S>::zeros(n, ev.f);

  const Rational twol = global.m1 - global.m2;
  for (std::size_t j = 0; j < n; ++j) {
    const GZPattern& p = rep.basis.at(j);
    for (auto [gen, mat] : {std::pair{EvenGen::E11, &rep.e11}, {EvenGen::E22, &rep.e22},
                            {EvenGen::E33, &rep.e33}, {EvenGen::E12, &rep.e12},
                            {EvenGen::E21, &rep.e21}, {EvenGen::L, &rep.ell}})
      for (auto& [target, coeff] : detail::even_action_impl(gen, p, ev))
        mat->at(index_of(target, rep.basis), j) += coeff;

    detail::OddArgs o = detail::odd_args(p);
    if (c.kind == TypicalityKind::Class1) {
      // surviving blocks 0 and 1; the factor l23+l33+3 becomes l23-l13
      Rational up = -(twol + 1);
      if (p.k == 1 && o.A != 0)
        rep.e23.at(index_of(0, p.m11, rep.basis), j) +=
            a[0] * ev.pqr(up) * sqrt(ev.qb(o.A) / ev.qb(twol + 1)) * ev.qb(up);
      if (p.k == 0)
        rep.e32.at(index_of(1, p.m11, rep.basis), j) +=
            (ev.f.one() / a[0]) * sqrt(ev.qb(o.A) / ev.qb(twol + 1));
    } else {
      // surviving blocks 0 and 2; the factor l13+l33+3 becomes l13-l23
      if (p.k == 2)
        rep.e23.at(index_of(0, p.m11, rep.basis), j) +=
            a[1] * ev.pqr(1) * sqrt(ev.qb(o.B) / ev.qb(twol)) * ev.qb(twol + 1);
      if (p.k == 0 && o.B != 0 && twol != 0)
        rep.e32.at(index_of(2, p.m11, rep.basis), j) +=
            (ev.f.one() / a[1]) * ev.pqr(o.B - 1) * sqrt(ev.qb(o.B) * ev.qb(twol)) / ev.qb(twol + 1);
    }
  }

  S qinv = pow_int(params.q, -1);
  S pinv = pow_int(params.p, -1);
  rep.e13 = r_commutator(rep.e12, rep.e23, qinv);
  rep.e31 = r_commutator(rep.e21, rep.e32, pinv).scaled(-ev.f.one());
  return rep;
}

}  // namespace qgl21
