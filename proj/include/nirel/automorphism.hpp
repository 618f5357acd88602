#ifndef NIREL_AUTOMORPHISM_HPP
#define NIREL_AUTOMORPHISM_HPP

#include <string>

#include "nirel/heisenberg.hpp"
#include "nirel/matrix_core.hpp"

namespace nirel {

/// t(S) zeta S == zeta within tolerance.
template <typename Scalar>
bool is_symplectic(const Mat<Scalar>& s, const SymplecticMetric<Scalar>& g,
                   const Tolerance& tol = kDefaultTolerance) {
  require_square(s, "is_symplectic");
  if (s.rows() != 2 * g.m())
    throw UsageError("is_symplectic: expected dimension " + std::to_string(2 * g.m()) +
                     ", got " + std::to_string(s.rows()));
  return mat_close(Mat<Scalar>(s.transpose() * g.zeta() * s), g.zeta(), tol);
}

/// Inverse of a symplectic matrix, -zeta t(S) zeta (valid when zeta^2 = -I).
template <typename Scalar>
Mat<Scalar> symplectic_inverse(const Mat<Scalar>& s, const SymplecticMetric<Scalar>& g) {
  return -g.zeta() * s.transpose() * g.zeta();
}

/// Parameters (epsilon, delta, Sigma, z, iota) of an automorphism Omega of H(m).
template <typename Scalar>
struct AutHElement {
  int epsilon = 1;
  Scalar delta = 1;
  Mat<Scalar> Sigma;
  Vec<Scalar> z;
  Scalar iota = 0;

  int m() const { return static_cast<int>(z.size() / 2); }

  static AutHElement identity(int m) {
    return {1, Scalar(1), Mat<Scalar>::Identity(2 * m, 2 * m), Vec<Scalar>::Zero(2 * m),
            Scalar(0)};
  }
  /// Delta(epsilon, delta): pure dilation / sign flip.
  static AutHElement dilation(int m, int epsilon, Scalar delta) {
    AutHElement out = identity(m);
    out.epsilon = epsilon;
    out.delta = delta;
    return out;
  }
  static AutHElement symplectic(const Mat<Scalar>& sigma) {
    AutHElement out = identity(static_cast<int>(sigma.rows() / 2));
    out.Sigma = sigma;
    return out;
  }
  /// The inner automorphism corresponding to Upsilon(z, iota).
  static AutHElement inner(const HeisenbergElement<Scalar>& e) {
    AutHElement out = identity(e.m());
    out.z = e.z;
    out.iota = e.iota;
    return out;
  }
};

/// Checks the AutHElement invariants; throws MembershipError / UsageError.
template <typename Scalar>
void validate(const AutHElement<Scalar>& w, const SymplecticMetric<Scalar>& g,
              const Tolerance& tol = kDefaultTolerance) {
  const Eigen::Index k = 2 * g.m();
  if (w.z.size() != k || w.Sigma.rows() != k || w.Sigma.cols() != k)
    throw UsageError("AutHElement: dimensions do not match metric with m = " +
                     std::to_string(g.m()));
  if (w.epsilon != 1 && w.epsilon != -1) throw UsageError("AutHElement: epsilon must be +1 or -1");
  if (w.delta == Scalar(0)) throw UsageError("AutHElement: delta must be nonzero");
  const Mat<Scalar> form = w.Sigma.transpose() * g.zeta() * w.Sigma;
  if (!mat_close(form, g.zeta(), tol))
    throw MembershipError("AutHElement: Sigma is not symplectic",
                          static_cast<double>(max_abs_diff(form, g.zeta())));
}

/// Realization
///   [ delta Sigma                      0                 z    ]
///   [ -epsilon delta t(z) zeta Sigma   epsilon delta^2   iota ]
///   [ 0                                0                 epsilon ]
/// The lower-left row carries the factor epsilon*delta so that the family is
/// closed under multiplication; it equals Delta(eps, delta) Sigma Upsilon(u, k)
/// with u = Sigma^-1 z / delta.
template <typename Scalar>
Mat<Scalar> auth_realize(const AutHElement<Scalar>& w, const SymplecticMetric<Scalar>& g) {
  validate(w, g);
  const Eigen::Index k = 2 * g.m();
  const Scalar eps = Scalar(w.epsilon);
  Mat<Scalar> out = Mat<Scalar>::Zero(k + 2, k + 2);
  out.topLeftCorner(k, k) = w.delta * w.Sigma;
  out.block(0, k + 1, k, 1) = w.z;
  out.block(k, 0, 1, k) = -eps * w.delta * (w.z.transpose() * g.zeta() * w.Sigma);
  out(k, k) = eps * w.delta * w.delta;
  out(k, k + 1) = w.iota;
  out(k + 1, k + 1) = eps;
  return out;
}

template <typename Scalar>
AutHElement<Scalar> auth_mul(const AutHElement<Scalar>& a, const AutHElement<Scalar>& b,
                             const SymplecticMetric<Scalar>& g) {
  if (a.z.size() != 2 * g.m() || b.z.size() != 2 * g.m())
    throw UsageError("auth_mul: dimension mismatch");
  const Scalar ea = Scalar(a.epsilon);
  const Scalar eb = Scalar(b.epsilon);
  AutHElement<Scalar> out;
  out.epsilon = a.epsilon * b.epsilon;
  out.delta = a.delta * b.delta;
  out.Sigma = a.Sigma * b.Sigma;
  out.z = eb * a.z + a.delta * (a.Sigma * b.z);
  out.iota = eb * a.iota + ea * a.delta * a.delta * b.iota -
             ea * a.delta * a.z.dot(g.zeta() * (a.Sigma * b.z));
  return out;
}

template <typename Scalar>
AutHElement<Scalar> auth_inverse(const AutHElement<Scalar>& a, const SymplecticMetric<Scalar>& g) {
  const Mat<Scalar> sigma_inv = symplectic_inverse(a.Sigma, g);
  AutHElement<Scalar> out;
  out.epsilon = a.epsilon;
  out.delta = Scalar(1) / a.delta;
  out.Sigma = sigma_inv;
  out.z = -Scalar(a.epsilon) / a.delta * (sigma_inv * a.z);
  out.iota = -a.iota / (a.delta * a.delta);
  return out;
}

/// Omega = Delta(epsilon, delta) * Sigma * Upsilon(z, iota).
template <typename Scalar>
struct AutHDecomposition {
  AutHElement<Scalar> dilation;
  AutHElement<Scalar> symplectic;
  HeisenbergElement<Scalar> inner;
};

template <typename Scalar>
AutHDecomposition<Scalar> auth_decompose(const AutHElement<Scalar>& w,
                                         const SymplecticMetric<Scalar>& g) {
  const int m = g.m();
  const Mat<Scalar> sigma_inv = symplectic_inverse(w.Sigma, g);
  HeisenbergElement<Scalar> inner{(sigma_inv * w.z) / w.delta,
                                  Scalar(w.epsilon) * w.iota / (w.delta * w.delta)};
  return {AutHElement<Scalar>::dilation(m, w.epsilon, w.delta),
          AutHElement<Scalar>::symplectic(w.Sigma), inner};
}

/// Conjugation Omega Upsilon Omega^-1, read back as a Heisenberg element.
/// A result off the Heisenberg pattern raises ConsistencyError.
template <typename Scalar>
HeisenbergElement<Scalar> auth_act(const AutHElement<Scalar>& w, const HeisenbergElement<Scalar>& e,
                                   const SymplecticMetric<Scalar>& g,
                                   const Tolerance& tol = kDefaultTolerance) {
  detail::require_metric(e, g, "auth_act");
  const Mat<Scalar> omega = auth_realize(w, g);
  const Mat<Scalar> conj = omega * h_realize(e, g) * inverse(omega);
  return h_from_matrix(conj, g, tol);
}

/// Same action through the closed-form group law, with Upsilon embedded as
/// Omega(1, 1, I, z, iota).
template <typename Scalar>
HeisenbergElement<Scalar> auth_act_closed_form(const AutHElement<Scalar>& w,
                                               const HeisenbergElement<Scalar>& e,
                                               const SymplecticMetric<Scalar>& g) {
  const auto r = auth_mul(auth_mul(w, AutHElement<Scalar>::inner(e), g), auth_inverse(w, g), g);
  return {r.z, r.iota};
}

}  // namespace nirel

#endif  // NIREL_AUTOMORPHISM_HPP
