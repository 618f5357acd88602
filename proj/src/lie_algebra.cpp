#include "nirel/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace nirel {

namespace {

std::string idx2(const char* head, int a, int b) {
  return std::string(head) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}
std::string idx1(const char* head, int a) { return std::string(head) + "_" + std::to_string(a); }

// Generator family of a label: the text before the first '_' (or the label).
std::string family(const std::string& label) { return label.substr(0, label.find('_')); }

double eta(int a, int b) { return a != b ? 0.0 : (a == 0 ? -1.0 : 1.0); }

// c^p with the c = +inf limit, used by the three-notation rescaling.
double power_of(double c, int p) {
  if (std::isinf(c)) {
    if (p < 0) return 0.0;
    if (p == 0) return 1.0;
    throw UsageError("scale constant infinite with a positive power");
  }
  return std::pow(c, p);
}

// Index bookkeeping for L_{a,b} (a < b) and M_{a,b} (a <= b), a, b in 0..n.
struct CovariantIndex {
  int n;
  std::map<std::pair<int, int>, int> l, m;
  std::vector<std::string> labels;

  explicit CovariantIndex(int n_) : n(n_) {
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        l[{a, b}] = static_cast<int>(labels.size());
        labels.push_back(idx2("L", a, b));
      }
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        m[{a, b}] = static_cast<int>(labels.size());
        labels.push_back(idx2("M", a, b));
      }
  }
  int dim() const { return static_cast<int>(labels.size()); }
  // L_{a,b} = -L_{b,a}, L_{a,a} = 0.
  void add_l(Vecd& v, int a, int b, double coeff) const {
    if (a == b || coeff == 0.0) return;
    if (a < b)
      v(l.at({a, b})) += coeff;
    else
      v(l.at({b, a})) -= coeff;
  }
  void add_m(Vecd& v, int a, int b, double coeff) const {
    if (coeff == 0.0) return;
    v(m.at({std::min(a, b), std::max(a, b)})) += coeff;
  }
};

struct CovGen {
  bool is_l;
  int a, b;
};

std::vector<CovGen> covariant_gens(const CovariantIndex& ix) {
  std::vector<CovGen> out(ix.dim());
  for (const auto& [k, v] : ix.l) out[v] = {true, k.first, k.second};
  for (const auto& [k, v] : ix.m) out[v] = {false, k.first, k.second};
  return out;
}

// [L_ab, L_cd], [L_ab, M_cd] and (with inv_b2) [M_ab, M_cd] in the covariant basis.
Vecd covariant_bracket(const CovariantIndex& ix, const CovGen& x, const CovGen& y, double inv_b2) {
  Vecd v = Vecd::Zero(ix.dim());
  const int a = x.a, b = x.b, c = y.a, d = y.b;
  if (x.is_l && y.is_l) {
    ix.add_l(v, b, d, -eta(a, c));
    ix.add_l(v, b, c, eta(a, d));
    ix.add_l(v, a, d, eta(b, c));
    ix.add_l(v, a, c, -eta(b, d));
  } else if (x.is_l && !y.is_l) {
    ix.add_m(v, b, d, -eta(a, c));
    ix.add_m(v, b, c, -eta(a, d));
    ix.add_m(v, a, d, eta(b, c));
    ix.add_m(v, a, c, eta(b, d));
  } else if (!x.is_l && y.is_l) {
    v = -covariant_bracket(ix, y, x, inv_b2);
  } else if (inv_b2 != 0.0) {
    ix.add_l(v, b, d, -inv_b2 * eta(a, c));
    ix.add_l(v, b, c, -inv_b2 * eta(a, d));
    ix.add_l(v, a, d, -inv_b2 * eta(b, c));
    ix.add_l(v, a, c, -inv_b2 * eta(b, d));
  }
  return v;
}

Matd covariant_matrix(int n, const CovGen& g) {
  const int d = n + 1;
  auto e = [&](int a, int b) {
    Matd out = Matd::Zero(d, d);
    out(a, b) = eta(b, b);
    return out;
  };
  if (g.is_l) {
    const Matd lam = e(g.a, g.b) - e(g.b, g.a);
    return block_diag(lam, lam);
  }
  Matd out = Matd::Zero(2 * d, 2 * d);
  out.bottomLeftCorner(d, d) = e(g.a, g.b) + e(g.b, g.a);
  return out;
}

BracketTable covariant_table(const std::string& name, int n, double b) {
  const CovariantIndex ix(n);
  const auto gens = covariant_gens(ix);
  const double inv_b2 = std::isnan(b) ? 0.0 : (std::isinf(b) ? 0.0 : 1.0 / (b * b));
  BracketTable t(name, n, std::numeric_limits<double>::quiet_NaN(), b, ix.labels);
  for (int i = 0; i < ix.dim(); ++i)
    for (int j = 0; j < ix.dim(); ++j) {
      const Vecd v = covariant_bracket(ix, gens[i], gens[j], inv_b2);
      for (int k = 0; k < ix.dim(); ++k) t(i, j, k) = v(k);
    }
  return t;
}

// Three-notation labels share the covariant positions:
//   L_{0,j} -> K_j, L_{i,j} -> J_{i,j}, M_{0,0} -> R, M_{0,i} -> N_i, M_{i,j} -> Mo_{i,j}.
struct ThreeGen {
  char type;  // K, J, R, N, O
  int i = 0, j = 0;
};

std::vector<ThreeGen> three_gens(const CovariantIndex& ix) {
  std::vector<ThreeGen> out;
  for (const CovGen& g : covariant_gens(ix)) {
    if (g.is_l)
      out.push_back(g.a == 0 ? ThreeGen{'K', g.b, 0} : ThreeGen{'J', g.a, g.b});
    else if (g.a == 0)
      out.push_back(g.b == 0 ? ThreeGen{'R'} : ThreeGen{'N', g.b, 0});
    else
      out.push_back({'O', g.a, g.b});
  }
  return out;
}

std::string three_label(const ThreeGen& g) {
  switch (g.type) {
    case 'K': return idx1("K", g.i);
    case 'J': return idx2("J", g.i, g.j);
    case 'R': return "R";
    case 'N': return idx1("N", g.i);
    default: return idx2("Mo", g.i, g.j);
  }
}

// Sign and power of c in X_three = sign * c^power * X_covariant.
struct Scale {
  double sign;
  int power;
};

Scale three_scale(const ThreeGen& g, double k_sign) {
  switch (g.type) {
    case 'K': return {k_sign, -1};
    case 'J': return {1.0, 0};
    case 'R': return {1.0, -1};
    case 'N': return {1.0, 0};
    default: return {1.0, -1};
  }
}

std::vector<std::string> three_labels(int n) {
  std::vector<std::string> out;
  for (const auto& g : three_gens(CovariantIndex(n))) out.push_back(three_label(g));
  return out;
}

// k_sign = -1 encodes K_j = L_{j,0}/c; +1 encodes K_j = L_{0,j}/c.
BracketTable rescaled_three_table(const std::string& name, int n, double c, double k_sign) {
  const CovariantIndex ix(n);
  const BracketTable cov = covariant_table("ub_covariant", n, std::numeric_limits<double>::quiet_NaN());
  const auto gens = three_gens(ix);
  BracketTable t(name, n, c, std::numeric_limits<double>::quiet_NaN(), three_labels(n));
  const int d = ix.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double base = cov(i, j, k);
        if (base == 0.0) continue;
        const Scale si = three_scale(gens[i], k_sign), sj = three_scale(gens[j], k_sign),
                    sk = three_scale(gens[k], k_sign);
        t(i, j, k) = base * si.sign * sj.sign * sk.sign *
                     power_of(c, si.power + sj.power - sk.power);
      }
  return t;
}

// Helpers writing three-notation terms with label normalization.
struct ThreeIndex {
  std::map<std::string, int> pos;
  int dim;
  explicit ThreeIndex(int n) {
    const auto labels = three_labels(n);
    dim = static_cast<int>(labels.size());
    for (int k = 0; k < dim; ++k) pos[labels[k]] = k;
  }
  void j(Vecd& v, int a, int b, double coeff) const {
    if (a == b || coeff == 0.0) return;
    if (a < b)
      v(pos.at(idx2("J", a, b))) += coeff;
    else
      v(pos.at(idx2("J", b, a))) -= coeff;
  }
  void o(Vecd& v, int a, int b, double coeff) const {
    if (coeff == 0.0) return;
    v(pos.at(idx2("Mo", std::min(a, b), std::max(a, b)))) += coeff;
  }
  void k(Vecd& v, int a, double coeff) const {
    if (coeff != 0.0) v(pos.at(idx1("K", a))) += coeff;
  }
  void nn(Vecd& v, int a, double coeff) const {
    if (coeff != 0.0) v(pos.at(idx1("N", a))) += coeff;
  }
  void r(Vecd& v, double coeff) const {
    if (coeff != 0.0) v(pos.at("R")) += coeff;
  }
};

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

enum class ThreeVariant { Printed, Contracted };

// Ordered-pair formulas in three notation. Returns nullopt for pairs the
// formula list does not mention in this order.
std::optional<Vecd> three_formula(const ThreeIndex& ix, const ThreeGen& x, const ThreeGen& y,
                                  double c, ThreeVariant variant) {
  Vecd v = Vecd::Zero(ix.dim);
  const double inv_c2 = power_of(c, -2);
  const bool printed = variant == ThreeVariant::Printed;
  const int i = x.i, j = x.j, k = y.i, l = y.j;
  const std::string pair{x.type, y.type};
  if (pair == "JJ") {
    ix.j(v, j, l, -delta(i, k));
    ix.j(v, j, k, delta(i, l));
    ix.j(v, i, l, delta(j, k));
    ix.j(v, i, k, -delta(j, l));
  } else if (pair == "JK") {
    ix.k(v, j, -delta(i, k));
    ix.k(v, i, delta(j, k));
  } else if (pair == "JN") {
    ix.nn(v, j, -delta(i, k));
    ix.nn(v, i, delta(j, k));
  } else if (pair == "KN") {
    ix.o(v, i, k, -1.0);
    ix.r(v, -delta(i, k));
  } else if (pair == "JO") {
    const double s = printed ? 1.0 : -1.0;
    ix.o(v, j, l, s * delta(i, k));
    ix.o(v, j, k, -delta(i, l));
    ix.o(v, i, l, delta(j, k));
    ix.o(v, i, k, delta(j, l));
  } else if (printed && pair == "KK") {
    ix.j(v, i, k, inv_c2);
  } else if (printed && pair == "KR") {
    ix.nn(v, i, -2.0 * inv_c2);
  } else if (printed && pair == "KO") {
    ix.nn(v, l, -inv_c2 * delta(i, k));
    ix.nn(v, k, -inv_c2 * delta(i, l));
  } else {
    return std::nullopt;
  }
  return v;
}

BracketTable formula_three_table(const std::string& name, int n, double c, ThreeVariant variant) {
  const CovariantIndex cix(n);
  const ThreeIndex ix(n);
  const auto gens = three_gens(cix);
  BracketTable t(name, n, c, std::numeric_limits<double>::quiet_NaN(), three_labels(n));
  for (int p = 0; p < ix.dim; ++p)
    for (int q = 0; q < ix.dim; ++q) {
      Vecd v = Vecd::Zero(ix.dim);
      if (auto f = three_formula(ix, gens[p], gens[q], c, variant))
        v = *f;
      else if (auto g = three_formula(ix, gens[q], gens[p], c, variant))
        v = -*g;
      for (int k = 0; k < ix.dim; ++k) t(p, q, k) = v(k);
    }
  return t;
}

}  // namespace

std::string to_string(AlgebraName name) {
  switch (name) {
    case AlgebraName::UbCovariant: return "ub_covariant";
    case AlgebraName::UbThree: return "ub_three";
    case AlgebraName::U1nCovariant: return "u1n_covariant";
    case AlgebraName::UbcThree: return "ubc_three";
  }
  return "unknown";
}

AlgebraName parse_algebra_name(const std::string& name) {
  if (name == "ub_covariant" || name == "ub") return AlgebraName::UbCovariant;
  if (name == "ub_three" || name == "ub3") return AlgebraName::UbThree;
  if (name == "u1n_covariant" || name == "u1n") return AlgebraName::U1nCovariant;
  if (name == "ubc_three" || name == "ubc") return AlgebraName::UbcThree;
  throw UsageError("unknown algebra '" + name +
                   "' (expected ub_covariant, ub_three, u1n_covariant or ubc_three)");
}

BracketTable::BracketTable(std::string algebra, int n, double c, double b,
                           std::vector<std::string> labels)
    : algebra_(std::move(algebra)), n_(n), c_(c), b_(b), labels_(std::move(labels)) {
  const std::size_t d = labels_.size();
  data_.assign(d * d * d, 0.0);
}

std::size_t BracketTable::offset(int i, int j, int k) const {
  const std::size_t d = labels_.size();
  return (static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) * d +
         static_cast<std::size_t>(k);
}

int BracketTable::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UsageError("unknown generator label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

std::vector<Term> BracketTable::terms(int i, int j) const {
  std::vector<Term> out;
  for (int k = 0; k < dim(); ++k)
    if ((*this)(i, j, k) != 0.0) out.push_back({k, (*this)(i, j, k)});
  return out;
}

void BracketTable::set_antisymmetric(int i, int j, const Vecd& coeffs) {
  for (int k = 0; k < dim(); ++k) {
    (*this)(i, j, k) = coeffs(k);
    (*this)(j, i, k) = -coeffs(k);
  }
}

Vecd BracketTable::bracket(const Vecd& x, const Vecd& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw UsageError("bracket: coefficient vectors must have " + std::to_string(dim()) + " entries");
  Vecd out = Vecd::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim(); ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < dim(); ++k) out(k) += w * (*this)(i, j, k);
    }
  }
  return out;
}

double BracketTable::max_antisymmetry_violation() const {
  double worst = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        worst = std::max(worst, std::abs((*this)(i, j, k) + (*this)(j, i, k)));
  return worst;
}

std::string BracketTable::pair_name(int i, int j) const {
  return "[" + labels_.at(i) + "," + labels_.at(j) + "]";
}

GeneratorBasis build_basis(AlgebraName name, int n, double c, double b) {
  if (n < 1) throw UsageError("build_basis: n must be >= 1");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  GeneratorBasis out;
  out.name = name;
  out.n = n;
  const CovariantIndex ix(n);
  switch (name) {
    case AlgebraName::UbCovariant: {
      out.labels = ix.labels;
      for (const CovGen& g : covariant_gens(ix)) out.generators.push_back(covariant_matrix(n, g));
      out.table = covariant_table("ub_covariant", n, nan);
      break;
    }
    case AlgebraName::U1nCovariant: {
      if (!(b > 0.0)) throw UsageError("build_basis: b must be positive");
      out.b = b;
      out.labels = ix.labels;
      out.table = covariant_table("u1n_covariant", n, b);
      break;
    }
    case AlgebraName::UbThree: {
      if (!(c > 0.0)) throw UsageError("build_basis: c must be positive");
      out.c = c;
      out.labels = three_labels(n);
      out.table = rescaled_three_table("ub_three", n, c, -1.0);
      if (std::isfinite(c)) {
        const auto cov = covariant_gens(ix);
        const auto gens = three_gens(ix);
        for (std::size_t k = 0; k < cov.size(); ++k) {
          const Scale s = three_scale(gens[k], -1.0);
          out.generators.push_back(s.sign * power_of(c, s.power) * covariant_matrix(n, cov[k]));
        }
      }
      break;
    }
    case AlgebraName::UbcThree: {
      out.labels = three_labels(n);
      out.table = formula_three_table("ubc_three", n, std::numeric_limits<double>::infinity(),
                                      ThreeVariant::Contracted);
      break;
    }
  }
  return out;
}

BracketTable ub_three_printed_table(int n, double c) {
  return formula_three_table("ub_three_printed", n, c, ThreeVariant::Printed);
}

BracketTable ub_three_literal_k_table(int n, double c) {
  return rescaled_three_table("ub_three_literal_k", n, c, 1.0);
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) {
  if (x.basis == nullptr || y.basis == nullptr) throw UsageError("bracket: vector without basis");
  if (x.basis != y.basis &&
      (x.basis->name != y.basis->name || x.basis->n != y.basis->n ||
       x.basis->labels != y.basis->labels))
    throw UsageError("bracket: vectors belong to different bases");
  return {x.basis, x.basis->table.bracket(x.coeffs, y.coeffs)};
}

Matd realize(const AlgebraVector& x) {
  if (x.basis == nullptr || !x.basis->has_realization())
    throw UsageError("realize: basis has no matrix realization");
  if (x.coeffs.size() != x.basis->dim()) throw UsageError("realize: coefficient count mismatch");
  Matd out = Matd::Zero(x.basis->generators.front().rows(), x.basis->generators.front().cols());
  for (int k = 0; k < x.basis->dim(); ++k) out += x.coeffs(k) * x.basis->generators[k];
  return out;
}

namespace {
Matd flattened_generators(const GeneratorBasis& basis) {
  const Eigen::Index rows = basis.generators.front().size();
  Matd g(rows, basis.dim());
  for (int k = 0; k < basis.dim(); ++k)
    g.col(k) = Eigen::Map<const Vecd>(basis.generators[k].data(), rows);
  return g;
}

Vecd decompose_with(const Eigen::ColPivHouseholderQR<Matd>& qr, const Matd& g, const Matd& x,
                    double tol) {
  const Vecd target = Eigen::Map<const Vecd>(x.data(), x.size());
  const Vecd coeffs = qr.solve(target);
  const double residual = (g * coeffs - target).cwiseAbs().maxCoeff();
  if (residual > tol)
    throw ClosureError("matrix lies outside the generator span (residual " +
                       std::to_string(residual) + ")");
  return coeffs;
}
}  // namespace

Vecd decompose(const GeneratorBasis& basis, const Matd& x, double tol) {
  if (!basis.has_realization()) throw UsageError("decompose: basis has no matrix realization");
  if (x.rows() != basis.generators.front().rows() || x.cols() != basis.generators.front().cols())
    throw UsageError("decompose: dimension mismatch");
  const Matd g = flattened_generators(basis);
  const Eigen::ColPivHouseholderQR<Matd> qr(g);
  return decompose_with(qr, g, x, tol);
}

StructureReport verify_structure_constants(const GeneratorBasis& basis, const BracketTable& table,
                                           double threshold) {
  if (!basis.has_realization())
    throw UsageError("verify_structure_constants: " + to_string(basis.name) +
                     " has no matrix realization");
  if (table.labels() != basis.labels)
    throw UsageError("verify_structure_constants: table labels do not match the basis");
  const Matd g = flattened_generators(basis);
  const Eigen::ColPivHouseholderQR<Matd> qr(g);
  StructureReport report;
  report.algebra = to_string(basis.name);
  report.n = basis.n;
  const int d = basis.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Matd& x = basis.generators[i];
      const Matd& y = basis.generators[j];
      const Vecd coeffs = decompose_with(qr, g, Matd(x * y - y * x), 1e-10);
      double residual = 0.0;
      for (int k = 0; k < d; ++k) residual = std::max(residual, std::abs(coeffs(k) - table(i, j, k)));
      ++report.pairs_checked;
      report.max_residual = std::max(report.max_residual, residual);
      if (residual > threshold) report.mismatches.push_back({i, j, table.pair_name(i, j), residual});
    }
  return report;
}

double jacobi_check(const BracketTable& t) {
  const int d = t.dim();
  // inner(j, k) = [e_j, e_k] as a dense vector, then [e_i, inner] by linearity.
  double worst = 0.0;
  Vecd acc(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        acc.setZero();
        const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& c : cyc)
          for (int l = 0; l < d; ++l) {
            const double w = t(c[1], c[2], l);
            if (w == 0.0) continue;
            for (int m = 0; m < d; ++m) acc(m) += w * t(c[0], l, m);
          }
        worst = std::max(worst, acc.norm());
      }
  return worst;
}

double table_distance(const BracketTable& a, const BracketTable& b) {
  if (a.labels() != b.labels()) throw UsageError("table_distance: label sets differ");
  const int d = a.dim();
  double sum = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double diff = a(i, j, k) - b(i, j, k);
        sum += diff * diff;
      }
  return std::sqrt(sum);
}

ContractionReport contract(ContractionFamily family, int n, const std::vector<double>& values) {
  if (values.empty()) throw UsageError("contract: no parameter values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw UsageError("contract: values must be positive");
    if (i > 0 && !(values[i] > values[i - 1])) throw UsageError("contract: values must increase");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const BracketTable limit = family == ContractionFamily::UbThreeToUbc
                                 ? build_basis(AlgebraName::UbcThree, n).table
                                 : build_basis(AlgebraName::UbCovariant, n).table;
  ContractionReport report{family, n, {}, nan};
  std::vector<double> lx, ly;
  for (double value : values) {
    double dev = 0.0;
    if (std::isfinite(value)) {
      const BracketTable t = family == ContractionFamily::UbThreeToUbc
                                 ? build_basis(AlgebraName::UbThree, n, value).table
                                 : build_basis(AlgebraName::U1nCovariant, n, 1.0, value).table;
      dev = table_distance(t, limit);
      if (dev > 0.0) {
        lx.push_back(std::log(value));
        ly.push_back(std::log(dev));
      }
    }
    const double ratio = report.rows.empty() || report.rows.back().deviation == 0.0
                             ? nan
                             : dev / report.rows.back().deviation;
    if (!report.rows.empty() && std::isfinite(value) && !(dev < report.rows.back().deviation))
      throw ConvergenceError("contract: deviation did not decrease at value " +
                             std::to_string(value));
    report.rows.push_back({value, dev, ratio});
  }
  if (lx.size() >= 2) {
    const double n_pts = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    report.fitted_order = -(n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);
  }
  return report;
}

HamiltonReport hamilton_subalgebra(const GeneratorBasis& ubc) {
  if (ubc.name != AlgebraName::UbcThree)
    throw UsageError("hamilton_subalgebra: expects the ubc_three basis");
  const BracketTable& t = ubc.table;
  const int d = t.dim();
  std::vector<int> keep, ideal;
  for (int k = 0; k < d; ++k) (family(t.labels()[k]) == "Mo" ? ideal : keep).push_back(k);

  for (int x = 0; x < d; ++x)
    for (int y : ideal)
      for (int k : keep)
        if (t(x, y, k) != 0.0)
          throw ConsistencyError("hamilton_subalgebra: " + t.pair_name(x, y) +
                                 " leaves the M-circle span");

  HamiltonReport report;
  GeneratorBasis& sub = report.subalgebra;
  sub.name = AlgebraName::UbcThree;
  sub.n = ubc.n;
  for (int k : keep) sub.labels.push_back(t.labels()[k]);
  sub.table = BracketTable("hamilton", ubc.n, std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::quiet_NaN(), sub.labels);
  for (std::size_t p = 0; p < keep.size(); ++p)
    for (std::size_t q = 0; q < keep.size(); ++q) {
      for (std::size_t r = 0; r < keep.size(); ++r)
        sub.table(static_cast<int>(p), static_cast<int>(q), static_cast<int>(r)) =
            t(keep[p], keep[q], keep[r]);
      if (p < q)
        for (int k : ideal)
          if (t(keep[p], keep[q], k) != 0.0) {
            std::ostringstream os;
            os << t.pair_name(keep[p], keep[q]) << " -> " << t(keep[p], keep[q], k) << " "
               << t.labels()[k];
            report.dropped_terms.push_back(os.str());
          }
    }
  return report;
}

SignComparison compare_tables(const BracketTable& reference, const BracketTable& other,
                              const std::string& against, double tol) {
  if (reference.labels() != other.labels()) throw UsageError("compare_tables: label sets differ");
  SignComparison out;
  out.against = against;
  std::set<std::string> families;
  const int d = reference.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      double diff = 0.0;
      for (int k = 0; k < d; ++k) diff = std::max(diff, std::abs(reference(i, j, k) - other(i, j, k)));
      if (diff <= tol) continue;
      ++out.mismatched_pairs;
      const std::string fam =
          "[" + family(reference.labels()[i]) + "," + family(reference.labels()[j]) + "]";
      if (families.insert(fam).second) out.examples.push_back(reference.pair_name(i, j));
    }
  out.families.assign(families.begin(), families.end());
  return out;
}

}  // namespace nirel
