#ifndef NIREL_LIE_ALGEBRA_HPP
#define NIREL_LIE_ALGEBRA_HPP

#include <limits>
#include <string>
#include <vector>

#include "nirel/matrix_core.hpp"

namespace nirel {

enum class AlgebraName { UbCovariant, UbThree, U1nCovariant, UbcThree };

std::string to_string(AlgebraName name);
/// Accepts the canonical names plus the short aliases ub, ub3, u1n, ubc.
AlgebraName parse_algebra_name(const std::string& name);

struct Term {
  int k;
  double coeff;
};

/// Dense structure constants: [e_i, e_j] = sum_k C(i, j, k) e_k.
class BracketTable {
 public:
  BracketTable() = default;
  BracketTable(std::string algebra, int n, double c, double b, std::vector<std::string> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  int n() const { return n_; }
  double c() const { return c_; }
  double b() const { return b_; }
  const std::string& algebra() const { return algebra_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;

  double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }

  /// Nonzero terms of [e_i, e_j].
  std::vector<Term> terms(int i, int j) const;
  /// Writes the terms of [e_i, e_j] and -terms into [e_j, e_i].
  void set_antisymmetric(int i, int j, const Vecd& coeffs);

  Vecd bracket(const Vecd& x, const Vecd& y) const;
  double max_antisymmetry_violation() const;
  std::string pair_name(int i, int j) const;

 private:
  std::size_t offset(int i, int j, int k) const;

  std::string algebra_;
  int n_ = 0;
  double c_ = std::numeric_limits<double>::quiet_NaN();
  double b_ = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> labels_;
  std::vector<double> data_;
};

struct GeneratorBasis {
  AlgebraName name = AlgebraName::UbCovariant;
  int n = 1;
  double c = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> labels;
  /// Defining (2n+2)-dim matrices; empty for table-only algebras.
  std::vector<Matd> generators;
  BracketTable table;

  int dim() const { return static_cast<int>(labels.size()); }
  bool has_realization() const { return !generators.empty(); }
};

struct AlgebraVector {
  const GeneratorBasis* basis = nullptr;
  Vecd coeffs;
};

/// c is used by ub_three / ubc_three, b by u1n_covariant. A value of
/// +infinity gives the contracted limit table.
GeneratorBasis build_basis(AlgebraName name, int n, double c = 1.0, double b = 1.0);

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y);

/// Generator matrix of a Lie-algebra vector (requires a realization).
Matd realize(const AlgebraVector& x);

/// Coefficients of a matrix in the span of the generators. Throws ClosureError
/// when the least-squares residual exceeds `tol`.
Vecd decompose(const GeneratorBasis& basis, const Matd& x, double tol = 1e-10);

struct PairMismatch {
  int i;
  int j;
  std::string name;
  double residual;
};

struct StructureReport {
  std::string algebra;
  int n = 0;
  int pairs_checked = 0;
  double max_residual = 0;
  std::vector<PairMismatch> mismatches;
  bool passed(double threshold) const { return max_residual <= threshold; }
};

/// Compares every matrix commutator, decomposed in the basis, with `table`.
StructureReport verify_structure_constants(const GeneratorBasis& basis, const BracketTable& table,
                                           double threshold = 1e-12);
inline StructureReport verify_structure_constants(const GeneratorBasis& basis,
                                                  double threshold = 1e-12) {
  return verify_structure_constants(basis, basis.table, threshold);
}

/// max over triples of the norm of the Jacobiator.
double jacobi_check(const BracketTable& table);

/// Frobenius norm of the difference of two tables over the same labels.
double table_distance(const BracketTable& a, const BracketTable& b);

enum class ContractionFamily { UbThreeToUbc, U1nToUb };

struct ContractionRow {
  double value;
  double deviation;
  double ratio;  // deviation / previous deviation; NaN for the first row
};

struct ContractionReport {
  ContractionFamily family;
  int n;
  std::vector<ContractionRow> rows;
  double fitted_order;  // slope of -log(deviation) against log(value)
};

/// Deviation of the finite-parameter table from its limit at each value.
/// Values must be positive and increasing; +infinity is allowed and gives 0.
/// Throws ConvergenceError when finite deviations do not strictly decrease.
ContractionReport contract(ContractionFamily family, int n, const std::vector<double>& values);

struct HamiltonReport {
  GeneratorBasis subalgebra;
  /// Bracket terms along the M-circle ideal that the quotient drops.
  std::vector<std::string> dropped_terms;
};

/// The algebra on {K, J, R, N} obtained as the quotient of ubc_three by the
/// ideal spanned by the M-circle generators. Throws ConsistencyError if that
/// span is not an ideal.
HamiltonReport hamilton_subalgebra(const GeneratorBasis& ubc);

/// Brackets of ub_three as printed in three notation, with the rotation-stress
/// bracket sign [J_ij, M_kl] = +M_jl d_ik - ... For comparison only.
BracketTable ub_three_printed_table(int n, double c);

/// ub_three table derived with K_j = +L_{0,j}/c instead of L_{j,0}/c.
BracketTable ub_three_literal_k_table(int n, double c);

struct SignComparison {
  std::string against;
  int mismatched_pairs = 0;
  std::vector<std::string> families;  // e.g. "[J,M]"
  std::vector<std::string> examples;
};

/// Pairs where two tables over the same labels differ, grouped by generator family.
SignComparison compare_tables(const BracketTable& reference, const BracketTable& other,
                              const std::string& against, double tol = 1e-12);

}  // namespace nirel

#endif  // NIREL_LIE_ALGEBRA_HPP
