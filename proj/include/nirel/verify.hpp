#ifndef NIREL_VERIFY_HPP
#define NIREL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nirel/lie_algebra.hpp"

// Seeded property runs over the group, algebra and kinematic layers. Each
// function draws from its own generator seeded with `seed`, so results are
// reproducible and independent of call order.
namespace nirel::verify {

using nlohmann::json;

struct AxiomResiduals {
  double associativity = 0;
  double identity = 0;
  double inverse = 0;
  double max() const;
};

AxiomResiduals heisenberg_axioms(int m, int trials, std::uint64_t seed);
AxiomResiduals auth_axioms(int m, int trials, std::uint64_t seed);
AxiomResiduals ub_axioms(int n, int trials, std::uint64_t seed);

/// Max parameter or entry difference between the closed-form product and
/// the product of realizations.
double heisenberg_closed_vs_matrix(int m, int pairs, std::uint64_t seed);
double auth_closed_vs_matrix(int m, int pairs, std::uint64_t seed);
double ub_closed_vs_matrix(int n, int pairs, std::uint64_t seed);

struct ActionResiduals {
  /// epsilon = +1, z = 0, iota = 0: against (delta Sigma z, delta^2 iota).
  double dilation_symplectic = 0;
  /// epsilon = -1, z = 0, iota = 0: against (eps delta Sigma z, delta^2 iota).
  double sign_flip = 0;
  /// epsilon = -1 measured against (delta Sigma z, eps delta^2 iota).
  double sign_flip_printed_form = 0;
  /// Generic Omega: distance of the conjugate from the Heisenberg pattern.
  double generic_pattern = 0;
  /// Generic Omega: conjugation vs the closed-form group law.
  double generic_closed_form = 0;
  /// act(w, a b) vs act(w, a) act(w, b).
  double homomorphism = 0;
};

ActionResiduals auth_action(int m, int trials, std::uint64_t seed);

/// Max entry of t(G) eta~ G - eta~ over random Ub elements.
double ub_metric_invariance(int n, int trials, std::uint64_t seed);
/// Max |dtau^2 change| under transform_differential.
double proper_time_invariance(int n, int trials, std::uint64_t seed);

struct IntersectionResult {
  int samples = 0;
  int members = 0;             // samples satisfying both predicates
  int counterexamples = 0;     // predicate pair disagrees with (A = Lambda and Xi condition)
  int literal_disagreements = 0;  // samples where the Lambda-free Xi form would answer differently
};

IntersectionResult intersection_theorem(int n, int samples, std::uint64_t seed, double tol);

struct CompositionResult {
  double closed_form_vs_matrix = 0;  // group-law closed form vs extract(ub_mul)
  double printed_vs_matrix = 0;      // printed n = 1 formulas vs extract(ub_mul)
  double printed_associativity = 0;  // |(a b) c - a (b c)| for the printed formulas
  double velocity_special_case = 0;  // |v - 0.8 c| for v' = v'' = 0.5 c
  double round_trip = 0;             // assemble(extract(g)) vs g
};

CompositionResult composition(int pairs, std::uint64_t seed, double c);

/// Max relative error of the mass-rate closed form against central differences.
double mass_rate_oracle(int n, int worldlines, std::uint64_t seed, double step_fraction = 1e-5);

struct ClassicalLimitResult {
  double relative_deviation = 0;  // at c_large, worst over states
  double ratio = 0;               // summed deviation at 2 c_ratio over that at c_ratio
};

ClassicalLimitResult classical_limit_check(int n, int states, std::uint64_t seed, double c_large,
                                           double c_ratio);

struct Check {
  std::string name;
  double max_residual = 0;
  double threshold = 0;
  json detail;
  bool passed() const { return max_residual <= threshold; }
};

struct RunReport {
  std::string command;
  std::vector<Check> checks;
  json notes = json::object();
  long long elapsed_ms = 0;

  bool passed() const;
  json to_json(bool with_elapsed = true) const;
};

enum class Suite { GroupAxioms, Automorphism, Metric, Algebra, Contraction, All };
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct SuiteOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  /// When positive, replaces the default threshold of residual checks.
  double tol = 0;
  double c = 10;
  double b = 10;
  /// Structure-constant table to verify in place of the built-in one.
  std::optional<BracketTable> table;
};

/// Runs a suite; the report body is a function of the options only.
RunReport run_suite(Suite suite, const SuiteOptions& options);

}  // namespace nirel::verify

#endif  // NIREL_VERIFY_HPP
