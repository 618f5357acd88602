#include <gtest/gtest.h>

#include "nirel/relativity.hpp"
#include "nirel/sampling.hpp"
#include "test_util.hpp"

using namespace nirel;
using nirel::test::mat;

namespace {

using Ub = UbElement<double>;

TEST(DegenerateMetric, Blocks) {
  const DegenerateMetric<double> dm(2);
  EXPECT_EQ(dm.dim(), 3);
  EXPECT_MAT_NEAR(dm.eta(), mat(3, {-1, 0, 0, 0, 1, 0, 0, 0, 1}), 0.0);
  EXPECT_EQ(dm.eta_tilde().rows(), 6);
  EXPECT_EQ(dm.eta_tilde().bottomRightCorner(3, 3).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(DegenerateMetric<double>(0), UsageError);
}

TEST(Lorentz, SampledMatricesAreLorentz) {
  sampling::Rng rng(1);
  for (int n : {1, 2, 3}) {
    const DegenerateMetric<double> dm(n);
    const Matd l = sampling::lorentz(rng, n);
    EXPECT_TRUE(is_lorentz(l, dm.eta()));
    EXPECT_MAT_NEAR(lorentz_inverse(l, dm.eta()), inverse(l), 1e-11);
  }
}

TEST(Ub, AssembleRejectsNonLorentz) {
  EXPECT_THROW(ub_assemble(mat(2, {2, 0, 0, 1}), Matd(Matd::Zero(2, 2)), 1, 1.0), MembershipError);
}

TEST(Ub, AssembleRejectsBadForceBlockWithViolation) {
  try {
    ub_assemble(Matd(Matd::Identity(2, 2)), mat(2, {0, 1, 1, 0}), 1, 1.0);
    FAIL() << "expected MembershipError";
  } catch (const MembershipError& e) {
    EXPECT_NEAR(e.violation(), 2.0, 1e-15);
  }
}

TEST(Ub, AssembleRejectsBadShapes) {
  EXPECT_THROW(ub_assemble(Matd(Matd::Identity(3, 3)), Matd(Matd::Zero(2, 2)), 1, 1.0), UsageError);
  EXPECT_THROW(ub_assemble(Matd(Matd::Identity(2, 2)), Matd(Matd::Zero(2, 2)), 1, 0.0), UsageError);
}

TEST(Ub, ProductIsClosedAndMatchesMatrices) {
  sampling::Rng rng(2);
  for (int n : {1, 2, 3}) {
    const DegenerateMetric<double> dm(n);
    for (int t = 0; t < 100; ++t) {
      const Ub a = sampling::ub(rng, n), b = sampling::ub(rng, n);
      const Ub p = ub_mul(a, b);
      EXPECT_MAT_NEAR(p.realize(), Matd(a.realize() * b.realize()), 1e-10);
      EXPECT_LT(ub_xi_residual(p.Lambda, p.Xi, dm.eta()), 1e-9);
      EXPECT_MAT_NEAR(ub_inverse(a).realize(), inverse(a.realize()), 1e-9);
    }
  }
}

TEST(Ub, MembersPreserveBothForms) {
  sampling::Rng rng(3);
  for (int n : {1, 2, 3}) {
    const DegenerateMetric<double> dm(n);
    const Matd g = sampling::ub(rng, n).realize();
    EXPECT_TRUE(preserves_degenerate_metric(g, dm));
    EXPECT_TRUE(is_heisenberg_automorphism(g, dm.symplectic()));
    EXPECT_TRUE(is_heisenberg_automorphism(Matd(-g), dm.symplectic()));
  }
}

TEST(Ub, LambdaFreeFormIsNotClosed) {
  // Xi = eta S satisfies t(Xi) = eta Xi eta but not the condition with a boost.
  const DegenerateMetric<double> dm(1);
  const Matd boost = mat(2, {1.25, 0.75, 0.75, 1.25});
  const Matd xi = dm.eta() * mat(2, {1, 2, 2, -1});
  EXPECT_TRUE(xi_symmetric_literal(xi, dm.eta()));
  EXPECT_FALSE(ub_xi_condition(boost, xi, dm.eta()));
  EXPECT_FALSE(is_heisenberg_automorphism(lower_block(boost, xi, boost), dm.symplectic()));
  EXPECT_TRUE(ub_xi_condition(Matd(Matd::Identity(2, 2)), xi, dm.eta()));
}

TEST(Ub, NegatedLowerBlockFailsAutomorphismTest) {
  sampling::Rng rng(7);
  const DegenerateMetric<double> dm(2);
  const Matd l = sampling::lorentz(rng, 2);
  const Matd g = lower_block(l, Matd(l * dm.eta() * sampling::symmetric(rng, 3, -1, 1)), Matd(-l));
  EXPECT_TRUE(preserves_degenerate_metric(g, dm));
  EXPECT_MAT_NEAR(Matd(g.transpose() * dm.symplectic().zeta() * g), Matd(-dm.symplectic().zeta()), 1e-12);
  EXPECT_FALSE(is_heisenberg_automorphism(g, dm.symplectic()));
}

TEST(Ub, IndexFormEqualsLiteralForm) {
  sampling::Rng rng(4);
  for (int n : {1, 2, 3}) {
    const DegenerateMetric<double> dm(n);
    for (int t = 0; t < 40; ++t) {
      const Matd s = sampling::symmetric(rng, n + 1, -3, 3);
      const Matd xi = t % 2 == 0 ? Matd(dm.eta() * s) : sampling::matrix(rng, n + 1, -3, 3);
      EXPECT_EQ(xi_symmetric_literal(xi, dm.eta()), xi_symmetric_index_form(xi, dm.eta()));
    }
  }
}

TEST(Ob, InverseFormula) {
  sampling::Rng rng(5);
  const ObElement<double> g{sampling::lorentz(rng, 2), sampling::matrix(rng, 3, -2, 2),
                            Matd(sampling::matrix(rng, 3, -1, 1) + 3 * Matd::Identity(3, 3))};
  const auto gi = ob_inverse(g);
  EXPECT_MAT_NEAR(gi.realize(), inverse(g.realize()), 1e-11);
  EXPECT_GT(max_abs_diff(ob_inverse_swapped(g).realize(), gi.realize()), 1e-3);
}

TEST(Ub, AbelianConjugation) {
  sampling::Rng rng(6);
  const DegenerateMetric<double> dm(2);
  const Ub g = sampling::ub(rng, 2);
  const Ub x{2, Matd::Identity(3, 3), Matd(dm.eta() * sampling::symmetric(rng, 3, -1, 1)), 1.0};
  const Ub conj = ub_conjugate_abelian(g, x);
  EXPECT_MAT_NEAR(conj.realize(), Matd(g.realize() * x.realize() * inverse(g.realize())), 1e-10);
  EXPECT_THROW(ub_conjugate_abelian(g, g), UsageError);
}

TEST(Ub, DegenerateIntervalIsMinkowskiOnPositions) {
  const DegenerateMetric<double> dm(1);
  Vecd dz(4);
  dz << 2, 1, 7, -9;
  EXPECT_DOUBLE_EQ(degenerate_interval(dz, dm), -3.0);
}

TEST(Ub, MixedCIsRejected) {
  EXPECT_THROW(ub_mul(Ub::identity(1, 1.0), Ub::identity(1, 2.0)), UsageError);
  EXPECT_THROW(ub_mul(Ub::identity(1), Ub::identity(2)), UsageError);
}

}  // namespace
