#pragma once

// Independent construction of the odd generator matrices on the induced
// basis |t1,t2; n> = (E31)^t1 (E32)^t2 (x) v_n, derived only from the
// defining relations (anticommutator closure, vanishing squares, the
// composite lowering generator and the even action on the top block). It
// never touches the reduced-basis matrix-element formulas, so conjugating it
// with the basis transforms is a true cross-check of those formulas.

#include "qgl21/rep.hpp"

namespace qgl21::oracle {

// h2 eigenvalue on the top-block vector with bottom label n.
inline Rational h2_of(const Signature& g, const Rational& n) { return g.m1 + g.m2 + g.m3 - n; }

// phi(x) = (q/p)^{-x} [x], the scalar closing {E23, E32}.
template <class S>
S phi(const Rational& x, const Params<S>& params) {
  return ratio_pow(-x, params) * bracket(x, params);
}

// gl(2) lowering coefficient inside the top block: v_n -> c v_{n-1}.
template <class S>
S lowering_coeff(const Signature& g, const Rational& n, const Params<S>& params) {
  return sqrt(bracket(g.m1 - n + 1, params) * bracket(n - g.m2, params));
}

/// E32 on the induced basis: |0,0;n> -> |0,1;n>, |1,0;n> -> -p |1,1;n>.
template <class S>
Matrix<S> induced_e32(const Signature& g, const Params<S>& params) {
  Field<S> f = params.field();
  long long width = as_integer(g.m1 - g.m2) + 1;
  Matrix<S> m = Matrix<S>::zeros(static_cast<std::size_t>(4 * width), f);
  for (long long d = 0; d < width; ++d) {
    Rational n = g.m1 - d;
    m.at(induced_index(1, n, g), induced_index(0, n, g)) = f.one();
    m.at(induced_index(3, n, g), induced_index(2, n, g)) = -params.p;
  }
  return m;
}

/// E23 on the induced basis, from pushing E23 through the odd lowerings:
///   E23 |0,1;n> = phi(h2) |0,0;n>
///   E23 |1,0;n> = c_n (phi(h2+1)/p - phi(h2)) |0,0;n-1>
///   E23 |1,1;n> = c_n (phi(h2+1)/p^2 - phi(h2)/p) |0,1;n-1>
///                 - phi(h2+1)/p |1,0;n>
/// with h2 evaluated on v_n and c_n the gl(2) lowering coefficient.
template <class S>
Matrix<S> induced_e23(const Signature& g, const Params<S>& params) {
  Field<S> f = params.field();
  long long width = as_integer(g.m1 - g.m2) + 1;
  Matrix<S> m = Matrix<S>::zeros(static_cast<std::size_t>(4 * width), f);
  S pinv = pow_int(params.p, -1);
  for (long long d = 0; d < width; ++d) {
    Rational n = g.m1 - d;
    Rational h = h2_of(g, n);
    S ph = phi(h, params);
    S ph1 = phi(h + 1, params);
    S cn = lowering_coeff(g, n, params);

    m.at(induced_index(0, n, g), induced_index(1, n, g)) = ph;
    if (n - 1 >= g.m2) {
      m.at(induced_index(0, n - 1, g), induced_index(2, n, g)) = cn * (pinv * ph1 - ph);
      m.at(induced_index(1, n - 1, g), induced_index(3, n, g)) =
          cn * (pinv * pinv * ph1 - pinv * ph);
    }
    m.at(induced_index(2, n, g), induced_index(3, n, g)) = -(pinv * ph1);
  }
  return m;
}

/// Odd matrices in the reduced basis via the induced route:
/// T_{ind->red} . M_ind . T_{red->ind}.
template <class S>
Matrix<S> reduced_from_induced(const Matrix<S>& induced, const Signature& g,
                               const Params<S>& params, const std::array<S, 3>& a) {
  Matrix<S> to_ind = basis_transform(g, params, a, TransformDirection::ReducedToInduced);
  Matrix<S> to_red = basis_transform(g, params, a, TransformDirection::InducedToReduced);
  return to_red * induced * to_ind;
}

}  // namespace qgl21::oracle
