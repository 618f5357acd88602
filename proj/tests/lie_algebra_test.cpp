#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nirel/lie_algebra.hpp"
#include "test_util.hpp"

using namespace nirel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double coeff(const BracketTable& t, const std::string& x, const std::string& y, const std::string& z) {
  return t(t.index_of(x), t.index_of(y), t.index_of(z));
}

// Realization of u(1,n) on R^{2n+2} built independently of the library:
// L_ab acts as blockdiag(l, l), M_ab as (1/b) [[0, -s], [s, 0]].
std::vector<Matd> u1n_oracle_generators(int n, double b) {
  const int d = n + 1;
  auto e = [d](int i, int j) {
    Matd out = Matd::Zero(d, d);
    out(i, j) = j == 0 ? -1.0 : 1.0;
    return out;
  };
  std::vector<Matd> gens;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Matd l = e(i, j) - e(j, i);
      Matd g = Matd::Zero(2 * d, 2 * d);
      g.topLeftCorner(d, d) = l;
      g.bottomRightCorner(d, d) = l;
      gens.push_back(g);
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Matd s = e(i, j) + e(j, i);
      Matd g = Matd::Zero(2 * d, 2 * d);
      g.topRightCorner(d, d) = -s / b;
      g.bottomLeftCorner(d, d) = s / b;
      gens.push_back(g);
    }
  return gens;
}

TEST(LieAlgebra, Dimensions) {
  EXPECT_EQ(build_basis(AlgebraName::UbCovariant, 1).dim(), 4);
  EXPECT_EQ(build_basis(AlgebraName::UbCovariant, 3).dim(), 16);
  EXPECT_EQ(build_basis(AlgebraName::UbcThree, 3).dim(), 16);
  EXPECT_EQ(build_basis(AlgebraName::U1nCovariant, 2, 1, 5).dim(), 9);
}

TEST(LieAlgebra, NameParsing) {
  EXPECT_EQ(parse_algebra_name("ub"), AlgebraName::UbCovariant);
  EXPECT_EQ(parse_algebra_name("ubc_three"), AlgebraName::UbcThree);
  EXPECT_EQ(to_string(AlgebraName::U1nCovariant), "u1n_covariant");
  EXPECT_THROW(parse_algebra_name("so3"), UsageError);
}

TEST(LieAlgebra, CovariantTableMatchesCommutators) {
  for (int n : {1, 2, 3}) {
    const auto basis = build_basis(AlgebraName::UbCovariant, n);
    const auto rep = verify_structure_constants(basis);
    EXPECT_EQ(rep.pairs_checked, basis.dim() * basis.dim());
    EXPECT_LT(rep.max_residual, 1e-12) << "n = " << n;
    EXPECT_TRUE(rep.mismatches.empty());
  }
}

TEST(LieAlgebra, ThreeNotationTableMatchesCommutators) {
  for (double c : {1.0, 10.0, 299.0}) {
    const auto basis = build_basis(AlgebraName::UbThree, 3, c);
    EXPECT_LT(verify_structure_constants(basis).max_residual, 1e-12) << "c = " << c;
  }
}

TEST(LieAlgebra, U1nTableMatchesIndependentRealization) {
  for (int n : {1, 2, 3}) {
    const double b = 3.0;
    const auto t = build_basis(AlgebraName::U1nCovariant, n, 1.0, b).table;
    const auto gens = u1n_oracle_generators(n, b);
    ASSERT_EQ(static_cast<int>(gens.size()), t.dim());
    Matd flat(gens[0].size(), t.dim());
    for (int k = 0; k < t.dim(); ++k) flat.col(k) = Eigen::Map<const Vecd>(gens[k].data(), gens[k].size());
    const auto qr = flat.colPivHouseholderQr();
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) {
        const Matd comm = gens[i] * gens[j] - gens[j] * gens[i];
        const Vecd x = qr.solve(Eigen::Map<const Vecd>(comm.data(), comm.size()));
        for (int k = 0; k < t.dim(); ++k) EXPECT_NEAR(x(k), t(i, j, k), 1e-12) << t.pair_name(i, j);
      }
  }
}

TEST(LieAlgebra, JacobiHoldsForAllFour) {
  for (int n : {1, 2, 3}) {
    EXPECT_LT(jacobi_check(build_basis(AlgebraName::UbCovariant, n).table), 1e-12);
    EXPECT_LT(jacobi_check(build_basis(AlgebraName::UbThree, n, 7.0).table), 1e-12);
    EXPECT_LT(jacobi_check(build_basis(AlgebraName::U1nCovariant, n, 1.0, 4.0).table), 1e-12);
    EXPECT_LT(jacobi_check(build_basis(AlgebraName::UbcThree, n).table), 1e-12);
  }
}

TEST(LieAlgebra, JacobiDetectsCorruption) {
  auto t = build_basis(AlgebraName::UbThree, 2, 5.0).table;
  const int k = t.index_of("K_1"), j = t.index_of("J_{1,2}"), kk = t.index_of("K_2");
  t(k, j, kk) += 1.0;
  t(j, k, kk) -= 1.0;
  EXPECT_GT(jacobi_check(t), 0.1);
}

TEST(LieAlgebra, PowerBracketCarriesTwoOverCSquared) {
  const auto t = build_basis(AlgebraName::UbThree, 3, 10.0).table;
  EXPECT_NEAR(coeff(t, "K_1", "R", "N_1"), -0.02, 1e-16);
  EXPECT_NEAR(coeff(t, "K_2", "K_1", "J_{1,2}") + coeff(t, "K_1", "K_2", "J_{1,2}"), 0.0, 0.0);
}

TEST(LieAlgebra, ContractedTableHasNoScale) {
  const auto t = build_basis(AlgebraName::UbcThree, 3).table;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (const Term& term : t.terms(i, j)) {
        const double a = std::abs(term.coeff);
        EXPECT_TRUE(a == 1.0 || a == 2.0) << t.pair_name(i, j) << " " << term.coeff;
      }
  EXPECT_EQ(table_distance(build_basis(AlgebraName::UbThree, 3, kInf).table, t), 0.0);
}

TEST(LieAlgebra, ReciprocalBracketScale) {
  const auto t = build_basis(AlgebraName::U1nCovariant, 1, 1.0, 10.0).table;
  EXPECT_NEAR(std::abs(coeff(t, "M_{0,0}", "M_{0,1}", "L_{0,1}")), 0.02, 1e-16);
  EXPECT_EQ(table_distance(build_basis(AlgebraName::U1nCovariant, 2, 1.0, kInf).table,
                           build_basis(AlgebraName::UbCovariant, 2).table),
            0.0);
}

TEST(LieAlgebra, SignComparisonIsolatesRotationStressFamily) {
  const auto derived = build_basis(AlgebraName::UbThree, 3, 10.0).table;
  const auto cmp = compare_tables(derived, ub_three_printed_table(3, 10.0), "printed");
  ASSERT_EQ(cmp.families.size(), 1u);
  EXPECT_EQ(cmp.families[0], "[J,Mo]");
  EXPECT_GT(cmp.mismatched_pairs, 0);
  EXPECT_GT(jacobi_check(ub_three_printed_table(3, 10.0)), 1e-6);
  EXPECT_EQ(compare_tables(derived, derived, "self").mismatched_pairs, 0);
}

TEST(LieAlgebra, DecomposeAndBracketRoundTrip) {
  const auto basis = build_basis(AlgebraName::UbCovariant, 2);
  Vecd x = Vecd::Zero(basis.dim()), y = Vecd::Zero(basis.dim());
  x(0) = 1.0;
  x(4) = -2.0;
  y(1) = 0.5;
  y(7) = 3.0;
  const AlgebraVector ax{&basis, x}, ay{&basis, y};
  const Matd mx = realize(ax), my = realize(ay);
  const Vecd got = decompose(basis, Matd(mx * my - my * mx));
  EXPECT_MAT_NEAR(got, bracket(ax, ay).coeffs, 1e-12);
  EXPECT_THROW(decompose(basis, Matd(Matd::Identity(6, 6))), ClosureError);
}

TEST(LieAlgebra, ContractionRates) {
  const auto rep = contract(ContractionFamily::UbThreeToUbc, 2, {10, 20, 40, 80});
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_TRUE(std::isnan(rep.rows[0].ratio));
  for (std::size_t i = 1; i < rep.rows.size(); ++i) EXPECT_NEAR(rep.rows[i].ratio, 0.25, 1e-12);
  EXPECT_NEAR(rep.fitted_order, 2.0, 1e-9);
  const auto u = contract(ContractionFamily::U1nToUb, 1, {10, 20, kInf});
  EXPECT_NEAR(u.rows[1].ratio, 0.25, 1e-12);
  EXPECT_EQ(u.rows[2].deviation, 0.0);
}

TEST(LieAlgebra, ContractionRejectsBadValues) {
  EXPECT_THROW(contract(ContractionFamily::UbThreeToUbc, 1, {20, 10}), UsageError);
  EXPECT_THROW(contract(ContractionFamily::UbThreeToUbc, 1, {-1, 10}), UsageError);
  EXPECT_THROW(contract(ContractionFamily::UbThreeToUbc, 1, {}), UsageError);
}

TEST(LieAlgebra, HamiltonQuotient) {
  for (int n : {1, 2, 3}) {
    const auto rep = hamilton_subalgebra(build_basis(AlgebraName::UbcThree, n));
    EXPECT_EQ(rep.subalgebra.dim(), n * (n - 1) / 2 + 2 * n + 1);
    EXPECT_LT(jacobi_check(rep.subalgebra.table), 1e-12);
    EXPECT_FALSE(rep.dropped_terms.empty());
    for (const auto& label : rep.subalgebra.labels) EXPECT_EQ(label.find("Mo"), std::string::npos);
  }
}

TEST(LieAlgebra, AntisymmetricByConstruction) {
  for (auto name : {AlgebraName::UbCovariant, AlgebraName::UbThree, AlgebraName::UbcThree})
    EXPECT_EQ(build_basis(name, 3, 4.0).table.max_antisymmetry_violation(), 0.0);
}

}  // namespace
