#ifndef NIREL_HEISENBERG_HPP
#define NIREL_HEISENBERG_HPP

#include <cmath>
#include <string>

#include "nirel/matrix_core.hpp"

namespace nirel {

/// The symplectic form zeta = [[0, eta], [-eta, 0]] on R^{2m}, with eta a
/// diagonal sign matrix supplied by the caller.
template <typename Scalar>
class SymplecticMetric {
 public:
  explicit SymplecticMetric(const Vec<Scalar>& eta_diagonal) {
    if (eta_diagonal.size() == 0) throw UsageError("SymplecticMetric: m must be positive");
    for (Eigen::Index i = 0; i < eta_diagonal.size(); ++i)
      if (eta_diagonal(i) != Scalar(1) && eta_diagonal(i) != Scalar(-1))
        throw UsageError("SymplecticMetric: eta entries must be +1 or -1");
    eta_ = eta_diagonal.asDiagonal();
    const Eigen::Index m = eta_diagonal.size();
    zeta_ = Mat<Scalar>::Zero(2 * m, 2 * m);
    zeta_.topRightCorner(m, m) = eta_;
    zeta_.bottomLeftCorner(m, m) = -eta_;
  }

  static SymplecticMetric identity(int m) { return SymplecticMetric(Vec<Scalar>::Ones(m)); }

  /// eta = diag(-1, 1, ..., 1).
  static SymplecticMetric minkowski(int m) {
    Vec<Scalar> d = Vec<Scalar>::Ones(m);
    d(0) = Scalar(-1);
    return SymplecticMetric(d);
  }

  int m() const { return static_cast<int>(eta_.rows()); }
  const Mat<Scalar>& eta() const { return eta_; }
  const Mat<Scalar>& zeta() const { return zeta_; }

 private:
  Mat<Scalar> eta_;
  Mat<Scalar> zeta_;
};

/// Parameters (z, iota) of the Heisenberg group element Upsilon(z, iota).
template <typename Scalar>
struct HeisenbergElement {
  Vec<Scalar> z;
  Scalar iota = 0;

  int m() const { return static_cast<int>(z.size() / 2); }

  static HeisenbergElement identity(int m) { return {Vec<Scalar>::Zero(2 * m), Scalar(0)}; }
};

namespace detail {
template <typename Scalar>
void require_metric(const HeisenbergElement<Scalar>& e, const SymplecticMetric<Scalar>& g,
                    const char* what) {
  if (e.z.size() != 2 * g.m())
    throw UsageError(std::string(what) + ": element has z of length " +
                     std::to_string(e.z.size()) + ", metric expects " +
                     std::to_string(2 * g.m()));
}
}  // namespace detail

/// (2m+2)x(2m+2) realization
///   [ I_2m      0  z    ]
///   [ t(zeta z) 1  iota ]
///   [ 0         0  1    ]
template <typename Scalar>
Mat<Scalar> h_realize(const HeisenbergElement<Scalar>& e, const SymplecticMetric<Scalar>& g) {
  detail::require_metric(e, g, "h_realize");
  const Eigen::Index k = 2 * g.m();
  Mat<Scalar> out = Mat<Scalar>::Identity(k + 2, k + 2);
  out.block(0, k + 1, k, 1) = e.z;
  out.block(k, 0, 1, k) = (g.zeta() * e.z).transpose();
  out(k, k + 1) = e.iota;
  return out;
}

/// Closed-form product a * b of Upsilon(z', iota') * Upsilon(z, iota).
/// The central term (zeta z') . z is what the realization multiplies out to.
template <typename Scalar>
HeisenbergElement<Scalar> h_mul(const HeisenbergElement<Scalar>& a,
                                const HeisenbergElement<Scalar>& b,
                                const SymplecticMetric<Scalar>& g) {
  detail::require_metric(a, g, "h_mul");
  detail::require_metric(b, g, "h_mul");
  const Scalar cocycle = (g.zeta() * a.z).dot(b.z);
  return {a.z + b.z, a.iota + b.iota + cocycle};
}

template <typename Scalar>
HeisenbergElement<Scalar> h_inverse(const HeisenbergElement<Scalar>& a) {
  return {-a.z, -a.iota};
}

/// Central coordinate of the group commutator a b a^-1 b^-1.
template <typename Scalar>
Scalar h_commutator_phase(const HeisenbergElement<Scalar>& a,
                          const HeisenbergElement<Scalar>& b,
                          const SymplecticMetric<Scalar>& g) {
  detail::require_metric(a, g, "h_commutator_phase");
  detail::require_metric(b, g, "h_commutator_phase");
  return Scalar(2) * (g.zeta() * a.z).dot(b.z);
}

/// Reads (z, iota) back from a matrix and checks the Heisenberg block pattern.
/// Throws ConsistencyError when any entry deviates by more than the tolerance.
template <typename Scalar>
HeisenbergElement<Scalar> h_from_matrix(const Mat<Scalar>& u, const SymplecticMetric<Scalar>& g,
                                        const Tolerance& tol = kDefaultTolerance) {
  const Eigen::Index k = 2 * g.m();
  if (u.rows() != k + 2 || u.cols() != k + 2)
    throw UsageError("h_from_matrix: expected a " + std::to_string(k + 2) + "-dim matrix");
  HeisenbergElement<Scalar> e{u.block(0, k + 1, k, 1), u(k, k + 1)};
  const Mat<Scalar> expected = h_realize(e, g);
  if (!mat_close(u, expected, tol))
    throw ConsistencyError("matrix is not a Heisenberg element (max deviation " +
                           std::to_string(static_cast<double>(max_abs_diff(u, expected))) + ")");
  return e;
}

}  // namespace nirel

#endif  // NIREL_HEISENBERG_HPP
