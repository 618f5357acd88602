#ifndef NIREL_RELATIVITY_HPP
#define NIREL_RELATIVITY_HPP

#include <string>

#include "nirel/heisenberg.hpp"
#include "nirel/matrix_core.hpp"

namespace nirel {

/// Minkowski eta = diag(-1, 1, ..., 1) on R^{n+1} and its degenerate
/// extension eta~ = [[eta, 0], [0, 0]] on R^{2n+2}.
template <typename Scalar>
class DegenerateMetric {
 public:
  explicit DegenerateMetric(int n) : n_(n) {
    if (n < 1) throw UsageError("DegenerateMetric: n must be >= 1");
    eta_ = Mat<Scalar>::Identity(n + 1, n + 1);
    eta_(0, 0) = Scalar(-1);
    eta_tilde_ = Mat<Scalar>::Zero(2 * n + 2, 2 * n + 2);
    eta_tilde_.topLeftCorner(n + 1, n + 1) = eta_;
  }

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  const Mat<Scalar>& eta() const { return eta_; }
  const Mat<Scalar>& eta_tilde() const { return eta_tilde_; }
  /// The symplectic form on the same phase space (Minkowski eta inside zeta).
  SymplecticMetric<Scalar> symplectic() const { return SymplecticMetric<Scalar>::minkowski(n_ + 1); }

 private:
  int n_;
  Mat<Scalar> eta_;
  Mat<Scalar> eta_tilde_;
};

/// Inverse of an eta-orthogonal matrix: eta t(L) eta.
template <typename Scalar>
Mat<Scalar> lorentz_inverse(const Mat<Scalar>& lambda, const Mat<Scalar>& eta) {
  return eta * lambda.transpose() * eta;
}

template <typename Scalar>
bool is_lorentz(const Mat<Scalar>& lambda, const Mat<Scalar>& eta,
                const Tolerance& tol = kDefaultTolerance) {
  require_same_dim(lambda, eta, "is_lorentz");
  return mat_close(Mat<Scalar>(lambda.transpose() * eta * lambda), eta, tol);
}

/// Block-lower-triangular [[top_left, 0], [lower_left, bottom_right]].
template <typename Scalar>
Mat<Scalar> lower_block(const Mat<Scalar>& top_left, const Mat<Scalar>& lower_left,
                        const Mat<Scalar>& bottom_right) {
  const Eigen::Index k = top_left.rows();
  Mat<Scalar> out = Mat<Scalar>::Zero(2 * k, 2 * k);
  out.topLeftCorner(k, k) = top_left;
  out.bottomLeftCorner(k, k) = lower_left;
  out.bottomRightCorner(k, k) = bottom_right;
  return out;
}

/// Element [[Lambda, 0], [Xi, A]] of Ob(1,n).
template <typename Scalar>
struct ObElement {
  Mat<Scalar> Lambda;
  Mat<Scalar> Xi;
  Mat<Scalar> A;

  int n() const { return static_cast<int>(Lambda.rows()) - 1; }
  Mat<Scalar> realize() const { return lower_block(Lambda, Xi, A); }
};

/// Inverse with lower-left block -A^-1 Xi Lambda^-1 (agrees with matrix inversion).
template <typename Scalar>
ObElement<Scalar> ob_inverse(const ObElement<Scalar>& g) {
  const Mat<Scalar> li = inverse(g.Lambda);
  const Mat<Scalar> ai = inverse(g.A);
  return {li, Mat<Scalar>(-ai * g.Xi * li), ai};
}

/// The alternative lower-left block -Lambda^-1 Xi A^-1. Equal to ob_inverse
/// only when A and Lambda commute appropriately (e.g. A = Lambda).
template <typename Scalar>
ObElement<Scalar> ob_inverse_swapped(const ObElement<Scalar>& g) {
  const Mat<Scalar> li = inverse(g.Lambda);
  const Mat<Scalar> ai = inverse(g.A);
  return {li, Mat<Scalar>(-li * g.Xi * ai), ai};
}

/// Gamma(Lambda, Xi) = [[Lambda, 0], [Xi, Lambda]] in Ub(1,n).
template <typename Scalar>
struct UbElement {
  int n = 1;
  Mat<Scalar> Lambda;
  Mat<Scalar> Xi;
  Scalar c = 1;

  static UbElement identity(int n, Scalar c = Scalar(1)) {
    return {n, Mat<Scalar>::Identity(n + 1, n + 1), Mat<Scalar>::Zero(n + 1, n + 1), c};
  }
  Mat<Scalar> realize() const { return lower_block(Lambda, Xi, Lambda); }
};

/// Residual of the force-block condition t(Xi) = eta Lambda^-1 Xi Lambda^-1 eta,
/// equivalently t(Lambda) eta Xi symmetric. At Lambda = I it is t(Xi) = eta Xi eta.
template <typename Scalar>
Scalar ub_xi_residual(const Mat<Scalar>& lambda, const Mat<Scalar>& xi, const Mat<Scalar>& eta) {
  const Mat<Scalar> s = lambda.transpose() * eta * xi;
  return max_abs_diff(s, Mat<Scalar>(s.transpose()));
}

template <typename Scalar>
bool ub_xi_condition(const Mat<Scalar>& lambda, const Mat<Scalar>& xi, const Mat<Scalar>& eta,
                     const Tolerance& tol = kDefaultTolerance) {
  const Mat<Scalar> s = lambda.transpose() * eta * xi;
  return mat_close(s, Mat<Scalar>(s.transpose()), tol);
}

/// The Lambda-free form t(Xi) = eta Xi eta.
template <typename Scalar>
bool xi_symmetric_literal(const Mat<Scalar>& xi, const Mat<Scalar>& eta,
                          const Tolerance& tol = kDefaultTolerance) {
  return mat_close(Mat<Scalar>(xi.transpose()), Mat<Scalar>(eta * xi * eta), tol);
}

/// Component form xi^a_b = eta^{ad} eta_{bc} xi^c_d, i.e. Xi = eta t(Xi) eta.
template <typename Scalar>
bool xi_symmetric_index_form(const Mat<Scalar>& xi, const Mat<Scalar>& eta,
                             const Tolerance& tol = kDefaultTolerance) {
  const Eigen::Index k = xi.rows();
  Mat<Scalar> rhs = Mat<Scalar>::Zero(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      for (Eigen::Index c = 0; c < k; ++c)
        for (Eigen::Index d = 0; d < k; ++d) rhs(a, b) += eta(a, d) * eta(b, c) * xi(c, d);
  return mat_close(xi, rhs, tol);
}

/// Validates and builds an element; MembershipError names the failing block.
template <typename Scalar>
UbElement<Scalar> ub_assemble(const Mat<Scalar>& lambda, const Mat<Scalar>& xi, int n, Scalar c,
                              const Tolerance& tol = kDefaultTolerance) {
  const DegenerateMetric<Scalar> dm(n);
  if (lambda.rows() != n + 1 || lambda.cols() != n + 1 || xi.rows() != n + 1 || xi.cols() != n + 1)
    throw UsageError("ub_assemble: blocks must be " + std::to_string(n + 1) + "x" +
                     std::to_string(n + 1));
  if (!(c > Scalar(0))) throw UsageError("ub_assemble: c must be positive");
  if (!all_finite(lambda) || !all_finite(xi)) throw UsageError("ub_assemble: non-finite entries");
  const Mat<Scalar> form = lambda.transpose() * dm.eta() * lambda;
  if (!mat_close(form, dm.eta(), tol))
    throw MembershipError("ub_assemble: Lambda is not in O(1,n)",
                          static_cast<double>(max_abs_diff(form, dm.eta())));
  if (!ub_xi_condition(lambda, xi, dm.eta(), tol))
    throw MembershipError("ub_assemble: Xi violates the force-block symmetry condition",
                          static_cast<double>(ub_xi_residual(lambda, xi, dm.eta())));
  return {n, lambda, xi, c};
}

namespace detail {
template <typename Scalar>
void require_compatible(const UbElement<Scalar>& a, const UbElement<Scalar>& b, const char* what) {
  if (a.n != b.n) throw UsageError(std::string(what) + ": n mismatch");
  if (a.c != b.c) throw UsageError(std::string(what) + ": c mismatch");
}
}  // namespace detail

/// Gamma(L', X') Gamma(L'', X'') = Gamma(L'L'', X'L'' + L'X'').
template <typename Scalar>
UbElement<Scalar> ub_mul(const UbElement<Scalar>& a, const UbElement<Scalar>& b) {
  detail::require_compatible(a, b, "ub_mul");
  return {a.n, Mat<Scalar>(a.Lambda * b.Lambda), Mat<Scalar>(a.Xi * b.Lambda + a.Lambda * b.Xi),
          a.c};
}

template <typename Scalar>
UbElement<Scalar> ub_inverse(const UbElement<Scalar>& a) {
  const DegenerateMetric<Scalar> dm(a.n);
  const Mat<Scalar> li = lorentz_inverse(a.Lambda, dm.eta());
  return {a.n, li, Mat<Scalar>(-li * a.Xi * li), a.c};
}

/// Conjugation of an abelian element Gamma(I, Xi) by g: Gamma(I, L Xi L^-1).
template <typename Scalar>
UbElement<Scalar> ub_conjugate_abelian(const UbElement<Scalar>& g, const UbElement<Scalar>& x,
                                       const Tolerance& tol = kDefaultTolerance) {
  detail::require_compatible(g, x, "ub_conjugate_abelian");
  const Mat<Scalar> id = Mat<Scalar>::Identity(x.n + 1, x.n + 1);
  if (!mat_close(x.Lambda, id, tol))
    throw UsageError("ub_conjugate_abelian: x is not in the abelian subgroup (Lambda != I)");
  const DegenerateMetric<Scalar> dm(g.n);
  return {x.n, id, Mat<Scalar>(g.Lambda * x.Xi * lorentz_inverse(g.Lambda, dm.eta())), x.c};
}

/// t(G) eta~ G == eta~.
template <typename Scalar>
bool preserves_degenerate_metric(const Mat<Scalar>& g, const DegenerateMetric<Scalar>& dm,
                                 const Tolerance& tol = kDefaultTolerance) {
  require_square(g, "preserves_degenerate_metric");
  if (g.rows() != 2 * dm.n() + 2)
    throw UsageError("preserves_degenerate_metric: expected dimension " +
                     std::to_string(2 * dm.n() + 2));
  return mat_close(Mat<Scalar>(g.transpose() * dm.eta_tilde() * g), dm.eta_tilde(), tol);
}

/// G or -G preserves zeta.
template <typename Scalar>
bool is_heisenberg_automorphism(const Mat<Scalar>& g, const SymplecticMetric<Scalar>& metric,
                                const Tolerance& tol = kDefaultTolerance) {
  require_square(g, "is_heisenberg_automorphism");
  if (g.rows() != 2 * metric.m())
    throw UsageError("is_heisenberg_automorphism: expected dimension " +
                     std::to_string(2 * metric.m()));
  // t(-G) zeta (-G) = t(G) zeta G, so the sign ambiguity is absorbed.
  return mat_close(Mat<Scalar>(g.transpose() * metric.zeta() * g), metric.zeta(), tol);
}

/// eta~-quadratic form of a phase-space differential dz = (dx, dp).
template <typename Scalar>
Scalar degenerate_interval(const Vec<Scalar>& dz, const DegenerateMetric<Scalar>& dm) {
  if (dz.size() != 2 * dm.n() + 2) throw UsageError("degenerate_interval: dimension mismatch");
  return dz.dot(dm.eta_tilde() * dz);
}

}  // namespace nirel

#endif  // NIREL_RELATIVITY_HPP
