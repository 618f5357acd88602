#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "nirel/kinematics.hpp"
#include "nirel/sampling.hpp"
#include "test_util.hpp"

using namespace nirel;
using nirel::test::mat;
using nirel::test::vec;

namespace {

using P = KinematicParams<double>;
using D = PhaseDifferential<double>;

P with_velocity(double v, double c = 1.0) {
  P p = P::zero(1, c);
  p.set_velocity(vec({v}));
  return p;
}

TEST(Kinematics, BoostForSixTenthsOfC) {
  const P p = with_velocity(0.6);
  EXPECT_MAT_NEAR(covariant_boost(p.beta), mat(2, {1.25, 0.75, 0.75, 1.25}), 1e-15);
  EXPECT_NEAR(p.gamma(), 1.25, 1e-15);
}

TEST(Kinematics, BoostMatrixScalesMixedEntries) {
  const P p = with_velocity(1.2, 2.0);
  const Matd b = boost_matrix(p.beta, 2.0, 1);
  EXPECT_MAT_NEAR(b, mat(2, {1.25, 0.375, 1.5, 1.25}), 1e-14);
  EXPECT_NEAR(b(0, 0), std::cosh(p.rapidity()), 1e-15);
}

TEST(Kinematics, BoostMatrixIsLorentzOnlyAtUnitC) {
  const DegenerateMetric<double> dm(2);
  const Vecd beta = vec({0.4, -0.2});
  EXPECT_TRUE(is_lorentz(boost_matrix(beta, 1.0, 2), dm.eta()));
  EXPECT_FALSE(is_lorentz(boost_matrix(beta, 2.0, 2), dm.eta()));
  EXPECT_TRUE(is_lorentz(covariant_boost(beta), dm.eta()));
}

TEST(Kinematics, SetVelocityRejectsLuminal) {
  P p = P::zero(2, 3.0);
  EXPECT_THROW(p.set_velocity(vec({3.0, 0.0})), UsageError);
  EXPECT_THROW(p.set_velocity(vec({1.0})), UsageError);
  p.set_velocity(vec({1.0, -2.0}));
  EXPECT_MAT_NEAR(p.velocity(), vec({1.0, -2.0}), 1e-14);
}

TEST(Kinematics, ValidateRejectsAsymmetricStress) {
  P p = P::zero(2);
  p.m = mat(2, {0, 1, 0, 0});
  EXPECT_THROW(validate(p), UsageError);
  p = P::zero(2);
  p.alpha = mat(2, {1, 0, 0, 0});
  EXPECT_THROW(validate(p), UsageError);
}

TEST(Kinematics, StressConjugationByBoost) {
  // B xi B^-1 with tanh b = 0.6 and xi = [[-1, -2], [2, 3]].
  const P p = with_velocity(0.6);
  const UbElement<double> g{1, covariant_boost(p.beta), Matd::Zero(2, 2), 1.0};
  EXPECT_MAT_NEAR(transform_stress(g, mat(2, {-1, -2, 2, 3})), mat(2, {0.5, -0.5, 0.5, 1.5}), 1e-14);
  EXPECT_THROW(transform_stress(g, mat(2, {0, 1, 1, 0})), UsageError);
}

TEST(Kinematics, TransformStressEqualsGroupConjugation) {
  sampling::Rng rng(12);
  const DegenerateMetric<double> dm(3);
  const auto g = sampling::ub(rng, 3);
  const Matd xi = dm.eta() * sampling::symmetric(rng, 4, -2, 2);
  const UbElement<double> x{3, Matd::Identity(4, 4), xi, 1.0};
  EXPECT_MAT_NEAR(transform_stress(g, xi), ub_conjugate_abelian(g, x).Xi, 1e-10);
}

TEST(Kinematics, StressBlockAtRest) {
  P p = P::zero(1, 2.0);
  p.f = vec({3});
  p.r = 4;
  p.m = mat(1, {6});
  EXPECT_MAT_NEAR(stress_block(p), mat(2, {2, -3, 3, 3}), 0.0);
  EXPECT_MAT_NEAR(assemble(p).Xi, stress_block(p), 0.0);
}

TEST(Kinematics, AssembledElementsAreMembers) {
  sampling::Rng rng(13);
  for (int n : {1, 2, 3}) {
    const DegenerateMetric<double> dm(n);
    for (int t = 0; t < 30; ++t) {
      const auto g = assemble(sampling::kinematic(rng, n, 2.5));
      EXPECT_TRUE(is_lorentz(g.Lambda, dm.eta()));
      EXPECT_LT(ub_xi_residual(g.Lambda, g.Xi, dm.eta()), 1e-12);
    }
  }
}

TEST(Kinematics, ExtractInvertsAssemble) {
  sampling::Rng rng(14);
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < 30; ++t) {
      const P p = sampling::kinematic(rng, n, 1.7);
      const P q = extract_params(assemble(p));
      EXPECT_MAT_NEAR(q.beta, p.beta, 1e-11);
      EXPECT_MAT_NEAR(q.alpha, p.alpha, 1e-10);
      EXPECT_MAT_NEAR(q.f, p.f, 1e-10);
      EXPECT_NEAR(q.r, p.r, 1e-10);
      EXPECT_MAT_NEAR(q.m, p.m, 1e-10);
    }
  }
}

TEST(Kinematics, ExtractRejectsOtherComponents) {
  UbElement<double> g = UbElement<double>::identity(1);
  g.Lambda = mat(2, {1, 0, 0, -1});
  EXPECT_THROW(extract_params(g), UnsupportedComponentError);
  g.Lambda = mat(2, {-1, 0, 0, -1});
  EXPECT_THROW(extract_params(g), UnsupportedComponentError);
}

TEST(Kinematics, VelocityAddition) {
  const P a = with_velocity(0.5);
  EXPECT_NEAR(compose_params(a, a).velocity()(0), 0.8, 1e-15);
  EXPECT_NEAR(compose_params_matrix(a, a).velocity()(0), 0.8, 1e-14);
  EXPECT_NEAR(compose_params_as_printed(a, a).velocity()(0), 0.8, 1e-15);
}

TEST(Kinematics, IdentityComposesToIdentity) {
  const P z = P::zero(1);
  const P out = compose_params(z, z);
  EXPECT_EQ(out.beta(0), 0.0);
  EXPECT_EQ(out.r, 0.0);
  EXPECT_EQ(out.f(0), 0.0);
}

TEST(Kinematics, ClosedFormMatchesMatrixComposition) {
  sampling::Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const P a = sampling::kinematic(rng, 1, 3.0), b = sampling::kinematic(rng, 1, 3.0);
    const P x = compose_params(a, b), y = compose_params_matrix(a, b);
    EXPECT_NEAR(x.beta(0), y.beta(0), 1e-12);
    EXPECT_NEAR(x.f(0), y.f(0), 1e-10);
    EXPECT_NEAR(x.r, y.r, 1e-10);
    EXPECT_NEAR(x.m(0, 0), y.m(0, 0), 1e-10);
  }
}

TEST(Kinematics, PrintedCompositionIsNotAssociative) {
  P a = with_velocity(0.5), b = with_velocity(-0.3), c = with_velocity(0.7);
  a.f(0) = 1.0;
  b.r = 2.0;
  c.m(0, 0) = -1.0;
  const P l = compose_params_as_printed(compose_params_as_printed(a, b), c);
  const P r = compose_params_as_printed(a, compose_params_as_printed(b, c));
  EXPECT_NEAR(l.velocity()(0), r.velocity()(0), 1e-14);
  EXPECT_GT(std::abs(l.r - r.r) + std::abs(l.f(0) - r.f(0)) + std::abs(l.m(0, 0) - r.m(0, 0)), 1e-3);
}

TEST(Kinematics, ClosedFormIsOneDimensional) {
  EXPECT_THROW(compose_params(P::zero(2), P::zero(2)), UsageError);
  EXPECT_THROW(compose_params(P::zero(1, 1.0), P::zero(1, 2.0)), UsageError);
}

TEST(Kinematics, ComposedSpeedStaysBelowC) {
  const P a = with_velocity(0.999999);
  EXPECT_LT(compose_params(a, a).velocity()(0), 1.0);
  EXPECT_LT(compose_params_matrix(a, a).velocity()(0), 1.0);
}

TEST(Kinematics, ProperTimeIsInvariant) {
  sampling::Rng rng(16);
  for (int n : {1, 2, 3})
    for (int t = 0; t < 100; ++t) {
      const auto g = sampling::ub(rng, n, 2.0);
      const D d = sampling::differential(rng, n, 2.0);
      EXPECT_NEAR(transform_differential(g, d).proper_time_sq(), d.proper_time_sq(), 1e-11);
    }
}

TEST(Kinematics, PowerEntersEnergyAsRDt) {
  P p = P::zero(1, 3.0);
  p.r = 2.0;
  D d = D::zero(1, 3.0);
  d.dt = 0.5;
  d.de = 1.0;
  const D out = transform_differential(assemble(p), d);
  EXPECT_NEAR(out.de, 1.0 + 2.0 * 0.5, 1e-15);
}

TEST(Kinematics, ClassicalLimitAtZeroParameters) {
  P p = P::zero(2);
  p.r = 1.5;
  const D d{2, 1.0, 0.3, vec({1, 2}), vec({3, 4}), 5};
  const D out = classical_limit(p, d);
  EXPECT_MAT_NEAR(out.dq, d.dq, 0.0);
  EXPECT_MAT_NEAR(out.dp, d.dp, 0.0);
  EXPECT_DOUBLE_EQ(out.de, 5 + 1.5 * 0.3);
}

TEST(Kinematics, LargeCApproachesClassicalLimit) {
  sampling::Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const P p = sampling::kinematic_by_velocity(rng, 3, 1.0, 0.4);
    const D d = sampling::differential(rng, 3, 1.0);
    const Vecd lim = classical_limit(p, d).flat();
    const double dev = (classical_limit_transform(p, d, 1e6).flat() - lim).norm() / lim.norm();
    EXPECT_LT(dev, 1e-6);
    const double d1 = (classical_limit_transform(p, d, 100.0).flat() - lim).norm();
    const double d2 = (classical_limit_transform(p, d, 200.0).flat() - lim).norm();
    EXPECT_NEAR(d2 / d1, 0.25, 0.01);
  }
}

TEST(Kinematics, MassRateMatchesFiniteDifference) {
  sampling::Rng rng(18);
  for (int t = 0; t < 10; ++t) {
    const auto model = sampling::worldline_model(rng, 2);
    const auto g = sampling::ub(rng, 2, 1.5);
    const double tau = 0.7, h = 1e-5;
    const double closed = mass_rate(g, model.velocity(tau), model.force(tau));
    const double fd = mass_rate_finite_difference(g, model.sample(tau - h, tau + h, 3), 1);
    EXPECT_NEAR(fd / closed, 1.0, 1e-6);
  }
}

TEST(Kinematics, MassRateVanishesWithoutForceBlock) {
  const auto g = assemble(with_velocity(0.4));
  EXPECT_NEAR(mass_rate(g, vec({1.2, 0.3}), vec({0.5, -0.1})), 0.0, 0.0);
}

TEST(Kinematics, WorldlineCsv) {
  sampling::Rng rng(19);
  const auto w = sampling::worldline_model(rng, 2).sample(0.0, 1.0, 3);
  EXPECT_NO_THROW(w.validate());
  std::ostringstream os;
  w.write_csv(os);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "tau,x0,x1,x2,p0,p1,p2");
  auto bad = w;
  bad.tau[2] = 0.0;
  EXPECT_THROW(bad.validate(), UsageError);
}

TEST(Kinematics, CentralDifferenceNeedsInteriorSample) {
  const std::vector<double> tau{0, 1, 2};
  const std::vector<Vecd> col{vec({0}), vec({1}), vec({4})};
  EXPECT_MAT_NEAR(central_difference(tau, col, 1), vec({2}), 0.0);
  EXPECT_THROW(central_difference(tau, col, 0), UsageError);
}

}  // namespace
