#include <gtest/gtest.h>

#include "nirel/json_io.hpp"
#include "nirel/sampling.hpp"
#include "test_util.hpp"

using namespace nirel;
using nlohmann::json;
using nirel::test::vec;

namespace {

TEST(JsonIo, MatrixRoundTrip) {
  const Matd m = nirel::test::mat(2, {1, 2, 3, 4});
  const json j = io::mat_to_json(m);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["entries"][1], 2.0);
  EXPECT_MAT_NEAR(io::mat_from_json(j), m, 0.0);
  EXPECT_THROW(io::mat_from_json(json{{"dim", 2}, {"entries", {1, 2, 3}}}), UsageError);
  EXPECT_THROW(io::mat_from_json(json{{"dim", 1}, {"entries", {"x"}}}), UsageError);
}

TEST(JsonIo, ParamsRoundTrip) {
  sampling::Rng rng(1);
  const auto p = sampling::kinematic(rng, 3, 2.0);
  json j = io::to_json(p);
  j.erase("v");
  const auto back = io::params_from_json(j);
  EXPECT_MAT_NEAR(back.beta, p.beta, 0.0);
  EXPECT_MAT_NEAR(back.m, p.m, 0.0);
  EXPECT_EQ(back.c, 2.0);
}

TEST(JsonIo, ParamsDefaultsAndVelocity) {
  const auto p = io::params_from_json(json{{"v", 0.5}, {"f", 1.0}});
  EXPECT_EQ(p.n, 1);
  EXPECT_EQ(p.c, 1.0);
  EXPECT_NEAR(p.velocity()(0), 0.5, 1e-15);
  EXPECT_EQ(p.f(0), 1.0);
  EXPECT_EQ(p.r, 0.0);
}

TEST(JsonIo, ParamsRejectsMalformed) {
  EXPECT_THROW(io::params_from_json(json{{"v", 0.5}, {"beta", 0.1}}), UsageError);
  EXPECT_THROW(io::params_from_json(json{{"v", 1.5}}), UsageError);
  EXPECT_THROW(io::params_from_json(json{{"n", 2}, {"f", {1.0}}}), UsageError);
  EXPECT_THROW(io::params_from_json(json{{"c", -1.0}}), UsageError);
  EXPECT_THROW(io::params_from_json(json{{"n", 2}, {"m", {{0, 1}, {2, 0}}}}), UsageError);
  EXPECT_THROW(io::params_from_json(json{{"r", "x"}}), UsageError);
}

TEST(JsonIo, ParseErrorIsUsageError) { EXPECT_THROW(io::parse("{not json", "input"), UsageError); }

TEST(JsonIo, UbValidatesMembership) {
  json j = io::to_json(UbElement<double>::identity(1));
  EXPECT_NO_THROW(io::ub_from_json(j));
  j["Xi"] = {{0, 1}, {1, 0}};
  EXPECT_THROW(io::ub_from_json(j), MembershipError);
}

TEST(JsonIo, AutomorphismAndHeisenbergRoundTrip) {
  sampling::Rng rng(2);
  const auto g = SymplecticMetric<double>::identity(2);
  const auto w = sampling::automorphism(rng, g);
  const auto w2 = io::auth_from_json(io::to_json(w));
  EXPECT_MAT_NEAR(w2.Sigma, w.Sigma, 0.0);
  EXPECT_EQ(w2.epsilon, w.epsilon);
  const auto e = io::heisenberg_from_json(io::to_json(HeisenbergElement<double>{vec({1, 2}), 3}));
  EXPECT_EQ(e.iota, 3.0);
  EXPECT_THROW(io::heisenberg_from_json(json{{"m", 1}, {"z", {1}}, {"iota", 0}}), UsageError);
}

TEST(JsonIo, DifferentialRoundTrip) {
  const PhaseDifferential<double> d{2, 3.0, 0.5, vec({1, 2}), vec({3, 4}), 5};
  const auto back = io::differential_from_json(io::to_json(d));
  EXPECT_MAT_NEAR(back.flat(), d.flat(), 0.0);
  EXPECT_EQ(back.c, 3.0);
}

TEST(JsonIo, TableRoundTrip) {
  for (auto name : {AlgebraName::UbThree, AlgebraName::UbcThree, AlgebraName::U1nCovariant}) {
    const auto t = build_basis(name, 2, 10.0, 5.0).table;
    const auto back = io::table_from_json(io::to_json(t));
    EXPECT_EQ(back.labels(), t.labels());
    EXPECT_EQ(table_distance(back, t), 0.0);
    EXPECT_EQ(back.algebra(), t.algebra());
  }
}

TEST(JsonIo, TableRejectsOutOfRangeIndex) {
  json j = io::to_json(build_basis(AlgebraName::UbCovariant, 1).table);
  j["brackets"][0]["i"] = 99;
  EXPECT_THROW(io::table_from_json(j), UsageError);
}

TEST(JsonIo, TableCsv) {
  const std::string csv = io::table_to_csv(build_basis(AlgebraName::UbCovariant, 1).table);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "i,j,k,bracket,result,coeff");
  EXPECT_NE(csv.find("\"[L_{0,1},M_{0,0}]\",M_{0,1},2"), std::string::npos);
}

}  // namespace
