#ifndef NIREL_KINEMATICS_HPP
#define NIREL_KINEMATICS_HPP

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "nirel/matrix_core.hpp"
#include "nirel/relativity.hpp"

namespace nirel {

/// Physical parameters of a Ub(1,n) element: rotation angles alpha (n x n,
/// antisymmetric), rapidity beta, force f, power r and stress m (n x n, symmetric).
template <typename Scalar>
struct KinematicParams {
  int n = 1;
  Scalar c = 1;
  Mat<Scalar> alpha;
  Vec<Scalar> beta;
  Vec<Scalar> f;
  Scalar r = 0;
  Mat<Scalar> m;

  static KinematicParams zero(int n, Scalar c = Scalar(1)) {
    return {n,
            c,
            Mat<Scalar>::Zero(n, n),
            Vec<Scalar>::Zero(n),
            Vec<Scalar>::Zero(n),
            Scalar(0),
            Mat<Scalar>::Zero(n, n)};
  }

  Scalar rapidity() const { return beta.norm(); }
  Scalar gamma() const { return std::cosh(rapidity()); }

  /// v = c (beta / |beta|) tanh |beta|.
  Vec<Scalar> velocity() const {
    const Scalar b = rapidity();
    if (b == Scalar(0)) return Vec<Scalar>::Zero(n);
    return c * std::tanh(b) / b * beta;
  }

  /// Sets beta from a velocity with |v| < c.
  void set_velocity(const Vec<Scalar>& v) {
    if (v.size() != n) throw UsageError("set_velocity: expected " + std::to_string(n) + " entries");
    const Scalar speed = v.norm();
    if (!(speed < c)) throw UsageError("set_velocity: |v| must be below c");
    beta = speed == Scalar(0) ? Vec<Scalar>(Vec<Scalar>::Zero(n))
                              : Vec<Scalar>(std::atanh(speed / c) / speed * v);
  }
};

template <typename Scalar>
void validate(const KinematicParams<Scalar>& p, const Tolerance& tol = kDefaultTolerance) {
  if (p.n < 1) throw UsageError("KinematicParams: n must be >= 1");
  if (!(p.c > Scalar(0)) || !std::isfinite(static_cast<double>(p.c)))
    throw UsageError("KinematicParams: c must be positive and finite");
  if (p.alpha.rows() != p.n || p.alpha.cols() != p.n || p.m.rows() != p.n || p.m.cols() != p.n ||
      p.beta.size() != p.n || p.f.size() != p.n)
    throw UsageError("KinematicParams: component sizes do not match n = " + std::to_string(p.n));
  if (!all_finite(p.alpha) || !all_finite(p.m) || !all_finite(p.beta) || !all_finite(p.f) ||
      !std::isfinite(static_cast<double>(p.r)))
    throw UsageError("KinematicParams: non-finite entries");
  if (!mat_close(p.alpha, Mat<Scalar>(-p.alpha.transpose()), tol))
    throw UsageError("KinematicParams: alpha must be antisymmetric");
  if (!mat_close(p.m, Mat<Scalar>(p.m.transpose()), tol))
    throw UsageError("KinematicParams: m must be symmetric");
}

/// Boost in covariant coordinates (t, q/c):
///   [ cosh b        sinh b t(u)              ]
///   [ sinh b u      I + (cosh b - 1) u t(u)  ],  u = beta / |beta|.
template <typename Scalar>
Mat<Scalar> covariant_boost(const Vec<Scalar>& beta) {
  const Eigen::Index n = beta.size();
  Mat<Scalar> out = Mat<Scalar>::Identity(n + 1, n + 1);
  const Scalar b = beta.norm();
  if (b == Scalar(0)) return out;
  const Vec<Scalar> u = beta / b;
  const Scalar ch = std::cosh(b);
  const Scalar sh = std::sinh(b);
  out(0, 0) = ch;
  out.block(0, 1, 1, n) = sh * u.transpose();
  out.block(1, 0, n, 1) = sh * u;
  out.bottomRightCorner(n, n) += (ch - Scalar(1)) * u * u.transpose();
  return out;
}

/// The boost acting on (t, q) with the 1/c and c factors on the mixed entries.
/// Equal to D B D^-1 with D = diag(1, c, ..., c); at c = 1 it is eta-orthogonal.
template <typename Scalar>
Mat<Scalar> boost_matrix(const Vec<Scalar>& beta, Scalar c, int n) {
  if (beta.size() != n) throw UsageError("boost_matrix: beta must have n entries");
  if (!(c > Scalar(0))) throw UsageError("boost_matrix: c must be positive");
  Mat<Scalar> out = covariant_boost(beta);
  out.block(0, 1, 1, n) /= c;
  out.block(1, 0, n, 1) *= c;
  return out;
}

template <typename Scalar>
Mat<Scalar> rotation_block(const Mat<Scalar>& alpha) {
  const Eigen::Index n = alpha.rows();
  Mat<Scalar> out = Mat<Scalar>::Identity(n + 1, n + 1);
  out.bottomRightCorner(n, n) = mat_exp(alpha);
  return out;
}

/// [[r/c, -t(f)], [f, m/c]].
template <typename Scalar>
Mat<Scalar> rest_stress(const KinematicParams<Scalar>& p) {
  Mat<Scalar> out(p.n + 1, p.n + 1);
  out(0, 0) = p.r / p.c;
  out.block(0, 1, 1, p.n) = -p.f.transpose();
  out.block(1, 0, p.n, 1) = p.f;
  out.bottomRightCorner(p.n, p.n) = p.m / p.c;
  return out;
}

/// Xi = gamma [[r/c, -f], [f, m/c]]; raises ConsistencyError if t(Xi) != eta Xi eta.
template <typename Scalar>
Mat<Scalar> stress_block(const KinematicParams<Scalar>& p) {
  validate(p);
  const Mat<Scalar> xi = p.gamma() * rest_stress(p);
  const DegenerateMetric<Scalar> dm(p.n);
  if (!xi_symmetric_literal(xi, dm.eta()))
    throw ConsistencyError("stress_block: result violates t(Xi) = eta Xi eta");
  return xi;
}

/// Lambda = B(beta) R(alpha) and Xi = gamma B(beta/2) X0 B(beta/2) R(alpha),
/// with X0 the rest stress. The half-boost split keeps t(Lambda) eta Xi
/// symmetric for every parameter set and reduces to gamma X0 at beta = 0.
template <typename Scalar>
UbElement<Scalar> assemble(const KinematicParams<Scalar>& p) {
  validate(p);
  const Mat<Scalar> rot = rotation_block(p.alpha);
  const Mat<Scalar> half = covariant_boost(Vec<Scalar>(p.beta / Scalar(2)));
  UbElement<Scalar> out;
  out.n = p.n;
  out.c = p.c;
  out.Lambda = covariant_boost(p.beta) * rot;
  out.Xi = p.gamma() * half * rest_stress(p) * half * rot;
  return out;
}

/// Inverse of assemble on the identity component of O(1,n).
template <typename Scalar>
KinematicParams<Scalar> extract_params(const UbElement<Scalar>& g) {
  const int n = g.n;
  if (g.Lambda.rows() != n + 1 || g.Xi.rows() != n + 1)
    throw UsageError("extract_params: block sizes do not match n");
  if (determinant(g.Lambda) < Scalar(0))
    throw UnsupportedComponentError("extract_params: det(Lambda) = -1 (parity) is not parametrized");
  if (g.Lambda(0, 0) < Scalar(1) - Scalar(1e-12))
    throw UnsupportedComponentError("extract_params: time-reversing Lambda is not parametrized");

  KinematicParams<Scalar> p = KinematicParams<Scalar>::zero(n, g.c);
  const Vec<Scalar> col = g.Lambda.block(1, 0, n, 1);
  const Scalar sh = col.norm();
  if (sh > Scalar(0)) p.beta = std::asinh(sh) / sh * col;

  const Mat<Scalar> unboost = covariant_boost(Vec<Scalar>(-p.beta));
  const Mat<Scalar> rot = unboost * g.Lambda;
  Mat<Scalar> spatial = rot.bottomRightCorner(n, n);
  if (n > 1) {
    const Mat<Scalar> a = mat_log(spatial);
    p.alpha = (a - a.transpose()) / Scalar(2);
  }

  const Mat<Scalar> half_back = covariant_boost(Vec<Scalar>(-p.beta / Scalar(2)));
  const Mat<Scalar> rot_inv = rot.transpose();
  const Mat<Scalar> x0 = half_back * g.Xi * rot_inv * half_back / p.gamma();
  p.r = g.c * x0(0, 0);
  p.f = (x0.block(1, 0, n, 1) - x0.block(0, 1, 1, n).transpose()) / Scalar(2);
  const Mat<Scalar> ms = x0.bottomRightCorner(n, n);
  p.m = g.c * (ms + ms.transpose()) / Scalar(2);
  return p;
}

/// Differentials of time, position, momentum and energy.
template <typename Scalar>
struct PhaseDifferential {
  int n = 1;
  Scalar c = 1;
  Scalar dt = 0;
  Vec<Scalar> dq;
  Vec<Scalar> dp;
  Scalar de = 0;

  static PhaseDifferential zero(int n, Scalar c = Scalar(1)) {
    return {n, c, Scalar(0), Vec<Scalar>::Zero(n), Vec<Scalar>::Zero(n), Scalar(0)};
  }

  /// x = (t, q/c).
  Vec<Scalar> dx() const {
    Vec<Scalar> out(n + 1);
    out(0) = dt;
    out.tail(n) = dq / c;
    return out;
  }
  /// p = (e/c, p).
  Vec<Scalar> dp_covariant() const {
    Vec<Scalar> out(n + 1);
    out(0) = de / c;
    out.tail(n) = dp;
    return out;
  }
  static PhaseDifferential from_covariant(const Vec<Scalar>& x, const Vec<Scalar>& p, Scalar c) {
    const int n = static_cast<int>(x.size()) - 1;
    return {n, c, x(0), Vec<Scalar>(c * x.tail(n)), Vec<Scalar>(p.tail(n)), c * p(0)};
  }

  /// dt^2 - |dq|^2 / c^2.
  Scalar proper_time_sq() const { return dt * dt - dq.squaredNorm() / (c * c); }

  Vec<Scalar> flat() const {
    Vec<Scalar> out(2 * n + 2);
    out(0) = dt;
    out.segment(1, n) = dq;
    out.segment(n + 1, n) = dp;
    out(2 * n + 1) = de;
    return out;
  }
};

/// dx~ = Lambda dx, dp~ = Lambda dp + Xi dx in covariant form.
template <typename Scalar>
PhaseDifferential<Scalar> transform_differential(const UbElement<Scalar>& g,
                                                 const PhaseDifferential<Scalar>& d) {
  if (g.n != d.n) throw UsageError("transform_differential: n mismatch");
  if (g.c != d.c) throw UsageError("transform_differential: c mismatch");
  const Vec<Scalar> x = d.dx();
  const Vec<Scalar> x_new = g.Lambda * x;
  const Vec<Scalar> p_new = g.Lambda * d.dp_covariant() + g.Xi * x;
  return PhaseDifferential<Scalar>::from_covariant(x_new, p_new, d.c);
}

/// Lambda xi Lambda^-1 for xi with t(xi) = eta xi eta.
template <typename Scalar>
Mat<Scalar> transform_stress(const UbElement<Scalar>& g, const Mat<Scalar>& xi,
                             const Tolerance& tol = kDefaultTolerance) {
  const DegenerateMetric<Scalar> dm(g.n);
  if (xi.rows() != g.n + 1 || xi.cols() != g.n + 1)
    throw UsageError("transform_stress: xi has wrong dimension");
  if (!xi_symmetric_literal(xi, dm.eta(), tol))
    throw UsageError("transform_stress: xi violates t(xi) = eta xi eta");
  return g.Lambda * xi * lorentz_inverse(g.Lambda, dm.eta());
}

namespace detail {
// B(t) X B(-t) on the n = 1 rest-stress pattern [[a, -b], [b, d]].
template <typename Scalar>
void adjoint_boost_1d(Scalar t, Scalar& a, Scalar& b, Scalar& d) {
  const Scalar C = std::cosh(Scalar(2) * t);
  const Scalar S = std::sinh(Scalar(2) * t);
  const Scalar a2 = ((C + Scalar(1)) * a - (C - Scalar(1)) * d) / Scalar(2) + S * b;
  const Scalar b2 = C * b + S * (a - d) / Scalar(2);
  const Scalar d2 = ((C + Scalar(1)) * d - (C - Scalar(1)) * a) / Scalar(2) - S * b;
  a = a2;
  b = b2;
  d = d2;
}

template <typename Scalar>
void require_composable(const KinematicParams<Scalar>& a, const KinematicParams<Scalar>& b) {
  validate(a);
  validate(b);
  if (a.n != b.n) throw UsageError("compose: n mismatch");
  if (a.c != b.c) throw UsageError("compose: c mismatch");
}

template <typename Scalar>
void check_speed(const KinematicParams<Scalar>& p) {
  if (!(p.velocity().norm() < p.c) || !all_finite(p.beta))
    throw ConsistencyError("compose: composed speed reached c");
}
}  // namespace detail

/// Composition through the matrices: extract(assemble(a) * assemble(b)). Any n.
template <typename Scalar>
KinematicParams<Scalar> compose_params_matrix(const KinematicParams<Scalar>& a,
                                              const KinematicParams<Scalar>& b) {
  detail::require_composable(a, b);
  const auto out = extract_params(ub_mul(assemble(a), assemble(b)));
  detail::check_speed(out);
  return out;
}

/// Scalar closed form of the n = 1 group law. Rapidities add; the rest stress
/// of the product is
///   X0 = (gamma' Ad_{B(-b''/2)} X0' + gamma'' Ad_{B(b'/2)} X0'') / cosh(b' + b'').
template <typename Scalar>
KinematicParams<Scalar> compose_params(const KinematicParams<Scalar>& a,
                                       const KinematicParams<Scalar>& b) {
  detail::require_composable(a, b);
  if (a.n != 1) throw UsageError("compose_params: the closed form is defined for n = 1 only");
  const Scalar c = a.c;
  const Scalar t1 = a.beta(0);
  const Scalar t2 = b.beta(0);
  Scalar a1 = a.r / c, f1 = a.f(0), d1 = a.m(0, 0) / c;
  Scalar a2 = b.r / c, f2 = b.f(0), d2 = b.m(0, 0) / c;
  detail::adjoint_boost_1d(-t2 / Scalar(2), a1, f1, d1);
  detail::adjoint_boost_1d(t1 / Scalar(2), a2, f2, d2);
  const Scalar g1 = std::cosh(t1);
  const Scalar g2 = std::cosh(t2);
  const Scalar g = std::cosh(t1 + t2);

  KinematicParams<Scalar> out = KinematicParams<Scalar>::zero(1, c);
  out.beta(0) = t1 + t2;
  out.r = c * (g1 * a1 + g2 * a2) / g;
  out.f(0) = (g1 * f1 + g2 * f2) / g;
  out.m(0, 0) = c * (g1 * d1 + g2 * d2) / g;
  detail::check_speed(out);
  return out;
}

/// The n = 1 composition formulas in their printed form: velocities add
/// relativistically and (f, r, m) combine over the common divisor 1 + v'v''/c^2.
/// Kept for comparison; these are not associative for generic inputs.
template <typename Scalar>
KinematicParams<Scalar> compose_params_as_printed(const KinematicParams<Scalar>& a,
                                                  const KinematicParams<Scalar>& b) {
  detail::require_composable(a, b);
  if (a.n != 1) throw UsageError("compose_params_as_printed: defined for n = 1 only");
  const Scalar c = a.c;
  const Scalar v1 = a.velocity()(0), v2 = b.velocity()(0);
  const Scalar f1 = a.f(0), f2 = b.f(0);
  const Scalar r1 = a.r, r2 = b.r;
  const Scalar m1 = a.m(0, 0), m2 = b.m(0, 0);
  const Scalar div = Scalar(1) + v1 * v2 / (c * c);

  KinematicParams<Scalar> out = KinematicParams<Scalar>::zero(1, c);
  Vec<Scalar> v(1);
  v(0) = (v2 + v1) / div;
  out.set_velocity(v);
  out.f(0) = (f2 + f1 + (r1 * v2 - v1 * r2) / (c * c)) / div;
  out.r = (r2 + r1 - f1 * v2 + v1 * f2) / div;
  out.m(0, 0) = (m2 + m1 + f1 * v2 - v1 * f2) / div;
  return out;
}

/// Difference of the mass-squared rate between frames:
///   (1/c^2) eta(Xi V, Xi V + 2 Lambda F)
/// for covariant four-velocity V and four-force F.
template <typename Scalar>
Scalar mass_rate(const UbElement<Scalar>& g, const Vec<Scalar>& V, const Vec<Scalar>& F) {
  if (V.size() != g.n + 1 || F.size() != g.n + 1)
    throw UsageError("mass_rate: V and F must have n + 1 entries");
  const DegenerateMetric<Scalar> dm(g.n);
  const Vec<Scalar> xv = g.Xi * V;
  const Vec<Scalar> lf = g.Lambda * F;
  return xv.dot(dm.eta() * (xv + Scalar(2) * lf)) / (g.c * g.c);
}

/// dt~ = dt, dq~ = R dq + v dt, dp~ = R dp + f dt, de~ = de + v.(R dp) - f.(R dq) + r dt,
/// with R = exp(alpha).
template <typename Scalar>
PhaseDifferential<Scalar> classical_limit(const KinematicParams<Scalar>& p,
                                          const PhaseDifferential<Scalar>& d) {
  validate(p);
  if (p.n != d.n) throw UsageError("classical_limit: n mismatch");
  const Mat<Scalar> rot = mat_exp(p.alpha);
  const Vec<Scalar> v = p.velocity();
  const Vec<Scalar> rq = rot * d.dq;
  const Vec<Scalar> rp = rot * d.dp;
  PhaseDifferential<Scalar> out = d;
  out.dq = rq + v * d.dt;
  out.dp = rp + p.f * d.dt;
  out.de = d.de + v.dot(rp) - p.f.dot(rq) + p.r * d.dt;
  return out;
}

/// The same physical frame change (same velocity, force, power, stress and
/// rotation) evaluated exactly at speed of light c_large.
template <typename Scalar>
PhaseDifferential<Scalar> classical_limit_transform(const KinematicParams<Scalar>& p,
                                                    const PhaseDifferential<Scalar>& d,
                                                    Scalar c_large) {
  validate(p);
  if (p.n != d.n) throw UsageError("classical_limit_transform: n mismatch");
  if (!(c_large > Scalar(0))) throw UsageError("classical_limit_transform: c must be positive");
  KinematicParams<Scalar> q = p;
  q.c = c_large;
  q.set_velocity(p.velocity());
  PhaseDifferential<Scalar> dd = d;
  dd.c = c_large;
  return transform_differential(assemble(q), dd);
}

/// Sampled trajectory (tau, x(tau), p(tau)) in covariant coordinates.
template <typename Scalar>
struct Worldline {
  std::vector<Scalar> tau;
  std::vector<Vec<Scalar>> x;
  std::vector<Vec<Scalar>> p;

  std::size_t size() const { return tau.size(); }

  void validate() const {
    if (x.size() != tau.size() || p.size() != tau.size())
      throw UsageError("Worldline: column lengths differ");
    for (std::size_t i = 1; i < tau.size(); ++i)
      if (!(tau[i] > tau[i - 1])) throw UsageError("Worldline: tau must be strictly increasing");
    for (std::size_t i = 0; i < tau.size(); ++i)
      if (!std::isfinite(static_cast<double>(tau[i])) || !all_finite(x[i]) || !all_finite(p[i]))
        throw UsageError("Worldline: non-finite sample");
  }

  /// CSV with header tau,x0..xn,p0..pn.
  void write_csv(std::ostream& os) const {
    if (tau.empty()) return;
    const Eigen::Index k = x.front().size();
    os << "tau";
    for (Eigen::Index a = 0; a < k; ++a) os << ",x" << a;
    for (Eigen::Index a = 0; a < k; ++a) os << ",p" << a;
    os << "\n";
    os.precision(17);
    for (std::size_t i = 0; i < tau.size(); ++i) {
      os << tau[i];
      for (Eigen::Index a = 0; a < k; ++a) os << "," << x[i](a);
      for (Eigen::Index a = 0; a < k; ++a) os << "," << p[i](a);
      os << "\n";
    }
  }
};

/// Central difference of column `which` (x or p) at interior sample i.
template <typename Scalar>
Vec<Scalar> central_difference(const std::vector<Scalar>& tau, const std::vector<Vec<Scalar>>& col,
                               std::size_t i) {
  if (i == 0 || i + 1 >= tau.size()) throw UsageError("central_difference: needs interior sample");
  return (col[i + 1] - col[i - 1]) / (tau[i + 1] - tau[i - 1]);
}

/// Mass-squared rate of the transformed trajectory minus that of the original,
/// from central differences of p~ = Lambda p + Xi x at interior sample i:
///   (eta(dp~/dtau, dp~/dtau) - eta(dp/dtau, dp/dtau)) / c^2.
template <typename Scalar>
Scalar mass_rate_finite_difference(const UbElement<Scalar>& g, const Worldline<Scalar>& w,
                                   std::size_t i) {
  const DegenerateMetric<Scalar> dm(g.n);
  std::vector<Vec<Scalar>> p_new;
  p_new.reserve(3);
  std::vector<Scalar> t3{w.tau[i - 1], w.tau[i], w.tau[i + 1]};
  std::vector<Vec<Scalar>> p3;
  for (std::size_t k = i - 1; k <= i + 1; ++k) {
    p_new.push_back(g.Lambda * w.p[k] + g.Xi * w.x[k]);
    p3.push_back(w.p[k]);
  }
  const Vec<Scalar> fp = central_difference(t3, p_new, 1);
  const Vec<Scalar> f0 = central_difference(t3, p3, 1);
  return (fp.dot(dm.eta() * fp) - f0.dot(dm.eta() * f0)) / (g.c * g.c);
}

}  // namespace nirel

#endif  // NIREL_KINEMATICS_HPP
