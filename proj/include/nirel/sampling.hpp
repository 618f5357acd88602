#ifndef NIREL_SAMPLING_HPP
#define NIREL_SAMPLING_HPP

#include <cmath>
#include <random>

#include "nirel/automorphism.hpp"
#include "nirel/heisenberg.hpp"
#include "nirel/kinematics.hpp"
#include "nirel/relativity.hpp"

// Seeded generators for property checks. Every sampler draws from a caller
// owned std::mt19937_64 so runs are reproducible.
namespace nirel::sampling {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vecd vector(Rng& rng, Eigen::Index k, double lo, double hi) {
  Vecd out(k);
  for (Eigen::Index i = 0; i < k; ++i) out(i) = uniform(rng, lo, hi);
  return out;
}

inline Matd matrix(Rng& rng, Eigen::Index k, double lo, double hi) {
  Matd out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = uniform(rng, lo, hi);
  return out;
}

inline Matd symmetric(Rng& rng, Eigen::Index k, double lo, double hi) {
  Matd out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) out(i, j) = out(j, i) = uniform(rng, lo, hi);
  return out;
}

inline Matd antisymmetric(Rng& rng, Eigen::Index k, double lo, double hi) {
  Matd out = Matd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) {
      out(i, j) = uniform(rng, lo, hi);
      out(j, i) = -out(i, j);
    }
  return out;
}

inline int sign(Rng& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

/// z and iota uniform in [-2, 2].
inline HeisenbergElement<double> heisenberg(Rng& rng, int m) {
  return {vector(rng, 2 * m, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
}

/// exp(x) for x = -zeta S in the symplectic algebra, S symmetric with entries in [-scale, scale].
inline Matd symplectic(Rng& rng, const SymplecticMetric<double>& g, double scale = 0.5) {
  const Matd x = -g.zeta() * symmetric(rng, 2 * g.m(), -scale, scale);
  return mat_exp(x);
}

/// |delta| in [0.5, 2] with random sign; epsilon random.
inline AutHElement<double> automorphism(Rng& rng, const SymplecticMetric<double>& g) {
  AutHElement<double> w;
  w.epsilon = sign(rng);
  w.delta = sign(rng) * uniform(rng, 0.5, 2.0);
  w.Sigma = symplectic(rng, g);
  w.z = vector(rng, 2 * g.m(), -2.0, 2.0);
  w.iota = uniform(rng, -2.0, 2.0);
  return w;
}

/// exp(eta A) with A antisymmetric, entries in [-scale, scale].
inline Matd lorentz(Rng& rng, int n, double scale = 1.0) {
  const DegenerateMetric<double> dm(n);
  return mat_exp(Matd(dm.eta() * antisymmetric(rng, n + 1, -scale, scale)));
}

/// Xi = Lambda eta S with S symmetric in [-scale, scale]; satisfies the Ub condition.
inline Matd ub_force_block(Rng& rng, const Matd& lambda, double scale = 10.0) {
  const DegenerateMetric<double> dm(static_cast<int>(lambda.rows()) - 1);
  return lambda * dm.eta() * symmetric(rng, lambda.rows(), -scale, scale);
}

inline UbElement<double> ub(Rng& rng, int n, double c = 1.0) {
  const Matd lambda = lorentz(rng, n);
  return {n, lambda, ub_force_block(rng, lambda), c};
}

/// Rapidity components in [-beta_max, beta_max], forces/power/stress in [-2, 2],
/// rotation angles in [-1, 1].
inline KinematicParams<double> kinematic(Rng& rng, int n, double c, double beta_max = 1.0) {
  KinematicParams<double> p = KinematicParams<double>::zero(n, c);
  p.alpha = antisymmetric(rng, n, -1.0, 1.0);
  p.beta = vector(rng, n, -beta_max, beta_max);
  p.f = vector(rng, n, -2.0, 2.0);
  p.r = uniform(rng, -2.0, 2.0);
  p.m = symmetric(rng, n, -2.0, 2.0);
  return p;
}

/// Same as kinematic but with velocity components in [-v_max, v_max] (physical units).
inline KinematicParams<double> kinematic_by_velocity(Rng& rng, int n, double c, double v_max) {
  KinematicParams<double> p = kinematic(rng, n, c);
  p.set_velocity(vector(rng, n, -v_max, v_max));
  return p;
}

inline PhaseDifferential<double> differential(Rng& rng, int n, double c) {
  return {n, c, uniform(rng, -1.0, 1.0), vector(rng, n, -1.0, 1.0), vector(rng, n, -1.0, 1.0),
          uniform(rng, -1.0, 1.0)};
}

/// Analytic trajectory used as a finite-difference oracle. The rapidity grows
/// linearly along a fixed direction u, so the four-velocity is
/// (cosh(th), sinh(th) u) with th = th0 + k tau; momentum is a smooth sum of
/// sinusoids.
struct WorldlineModel {
  int n = 1;
  double theta0 = 0;
  double kappa = 0;
  Vecd u;
  Vecd p0, p1, omega, phase;

  Vecd x(double tau) const {
    Vecd out(n + 1);
    const double th = theta0 + kappa * tau;
    if (kappa == 0.0) {
      out(0) = std::cosh(theta0) * tau;
      out.tail(n) = std::sinh(theta0) * tau * u;
    } else {
      out(0) = (std::sinh(th) - std::sinh(theta0)) / kappa;
      out.tail(n) = (std::cosh(th) - std::cosh(theta0)) / kappa * u;
    }
    return out;
  }
  Vecd velocity(double tau) const {
    const double th = theta0 + kappa * tau;
    Vecd out(n + 1);
    out(0) = std::cosh(th);
    out.tail(n) = std::sinh(th) * u;
    return out;
  }
  Vecd p(double tau) const {
    return p0 + (p1.array() * (omega.array() * tau + phase.array()).sin()).matrix();
  }
  Vecd force(double tau) const {
    return (p1.array() * omega.array() * (omega.array() * tau + phase.array()).cos()).matrix();
  }

  Worldline<double> sample(double tau0, double tau1, std::size_t count) const {
    Worldline<double> w;
    for (std::size_t i = 0; i < count; ++i) {
      const double t = tau0 + (tau1 - tau0) * static_cast<double>(i) / static_cast<double>(count - 1);
      w.tau.push_back(t);
      w.x.push_back(x(t));
      w.p.push_back(p(t));
    }
    return w;
  }
};

inline WorldlineModel worldline_model(Rng& rng, int n) {
  WorldlineModel w;
  w.n = n;
  w.theta0 = uniform(rng, -1.0, 1.0);
  w.kappa = uniform(rng, -0.5, 0.5);
  w.u = vector(rng, n, -1.0, 1.0);
  w.u /= w.u.norm();
  w.p0 = vector(rng, n + 1, -2.0, 2.0);
  w.p1 = vector(rng, n + 1, -1.0, 1.0);
  w.omega = vector(rng, n + 1, 0.2, 2.0);
  w.phase = vector(rng, n + 1, 0.0, 6.0);
  return w;
}

}  // namespace nirel::sampling

#endif  // NIREL_SAMPLING_HPP
