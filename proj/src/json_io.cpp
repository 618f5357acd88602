#include "nirel/json_io.hpp"

#include <cmath>
#include <sstream>

namespace nirel::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw UsageError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* field) {
  if (!j.is_number()) throw UsageError(std::string("field '") + field + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw UsageError(std::string("field '") + field + "' must be finite");
  return v;
}

int integer(const json& j, const char* field) {
  if (!j.is_number_integer()) throw UsageError(std::string("field '") + field + "' must be an integer");
  return j.get<int>();
}

json optional_number(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

double number_or_nan(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (it->is_string() && it->get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  return number(*it, key);
}

// A vector field, or for length-1 vectors a plain number.
Vecd vec_field(const json& j, const char* key, Eigen::Index expected) {
  const json& v = require(j, key);
  Vecd out = v.is_number() ? Vecd::Constant(1, number(v, key)) : vec_from_json(v, key);
  if (out.size() != expected)
    throw UsageError(std::string("field '") + key + "' must have " + std::to_string(expected) +
                     " entries");
  return out;
}

// A square matrix field in {"dim","entries"} form, as nested rows, or (1x1) a number.
Matd mat_field(const json& j, const char* key, Eigen::Index expected) {
  const json& v = require(j, key);
  Matd out;
  if (v.is_number()) {
    out = Matd::Constant(1, 1, number(v, key));
  } else if (v.is_array()) {
    const Eigen::Index k = static_cast<Eigen::Index>(v.size());
    out.resize(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      const Vecd row = vec_from_json(v[r], key);
      if (row.size() != k) throw UsageError(std::string("field '") + key + "' must be square");
      out.row(r) = row.transpose();
    }
  } else {
    out = mat_from_json(v, key);
  }
  if (out.rows() != expected)
    throw UsageError(std::string("field '") + key + "' must be " + std::to_string(expected) + "x" +
                     std::to_string(expected));
  return out;
}

}  // namespace

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

json mat_to_json(const Matd& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(m(i, j));
  return {{"dim", m.rows()}, {"entries", entries}};
}

Matd mat_from_json(const json& j, const char* field) {
  const int dim = integer(require(j, "dim"), "dim");
  const json& e = require(j, "entries");
  if (!e.is_array()) throw UsageError(std::string(field) + ": 'entries' must be an array");
  std::vector<double> values;
  values.reserve(e.size());
  for (const auto& x : e) values.push_back(number(x, field));
  return make_mat<double>(dim, values);
}

json vec_to_json(const Vecd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vecd vec_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw UsageError(std::string("field '") + field + "' must be an array");
  Vecd out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Eigen::Index>(i)) = number(j[i], field);
  return out;
}

json to_json(const HeisenbergElement<double>& e) {
  return {{"m", e.m()}, {"z", vec_to_json(e.z)}, {"iota", e.iota}};
}

HeisenbergElement<double> heisenberg_from_json(const json& j) {
  const int m = integer(require(j, "m"), "m");
  if (m < 1) throw UsageError("field 'm' must be positive");
  return {vec_field(j, "z", 2 * m), number(require(j, "iota"), "iota")};
}

json to_json(const AutHElement<double>& w) {
  return {{"m", w.m()},
          {"epsilon", w.epsilon},
          {"delta", w.delta},
          {"Sigma", mat_to_json(w.Sigma)},
          {"z", vec_to_json(w.z)},
          {"iota", w.iota}};
}

AutHElement<double> auth_from_json(const json& j) {
  const int m = integer(require(j, "m"), "m");
  if (m < 1) throw UsageError("field 'm' must be positive");
  AutHElement<double> w;
  w.epsilon = integer(require(j, "epsilon"), "epsilon");
  w.delta = number(require(j, "delta"), "delta");
  w.Sigma = mat_field(j, "Sigma", 2 * m);
  w.z = vec_field(j, "z", 2 * m);
  w.iota = number(require(j, "iota"), "iota");
  return w;
}

json to_json(const UbElement<double>& g) {
  return {{"n", g.n}, {"c", g.c}, {"Lambda", mat_to_json(g.Lambda)}, {"Xi", mat_to_json(g.Xi)}};
}

UbElement<double> ub_from_json(const json& j, const Tolerance& tol) {
  const int n = integer(require(j, "n"), "n");
  if (n < 1) throw UsageError("field 'n' must be positive");
  const double c = j.contains("c") ? number(j["c"], "c") : 1.0;
  return ub_assemble(mat_field(j, "Lambda", n + 1), mat_field(j, "Xi", n + 1), n, c, tol);
}

json to_json(const KinematicParams<double>& p) {
  return {{"n", p.n},
          {"c", p.c},
          {"alpha", mat_to_json(p.alpha)},
          {"beta", vec_to_json(p.beta)},
          {"v", vec_to_json(p.velocity())},
          {"f", vec_to_json(p.f)},
          {"r", p.r},
          {"m", mat_to_json(p.m)}};
}

KinematicParams<double> params_from_json(const json& j) {
  const int n = j.contains("n") ? integer(j["n"], "n") : 1;
  if (n < 1) throw UsageError("field 'n' must be positive");
  const double c = j.contains("c") ? number(j["c"], "c") : 1.0;
  if (!(c > 0.0)) throw UsageError("field 'c' must be positive");
  KinematicParams<double> p = KinematicParams<double>::zero(n, c);
  if (j.contains("alpha")) p.alpha = mat_field(j, "alpha", n);
  if (j.contains("beta") && j.contains("v"))
    throw UsageError("give either 'beta' or 'v', not both");
  if (j.contains("beta")) p.beta = vec_field(j, "beta", n);
  if (j.contains("v")) p.set_velocity(vec_field(j, "v", n));
  if (j.contains("f")) p.f = vec_field(j, "f", n);
  if (j.contains("r")) p.r = number(j["r"], "r");
  if (j.contains("m")) p.m = mat_field(j, "m", n);
  validate(p);
  return p;
}

json to_json(const PhaseDifferential<double>& d) {
  return {{"n", d.n},
          {"c", d.c},
          {"dt", d.dt},
          {"dq", vec_to_json(d.dq)},
          {"dp", vec_to_json(d.dp)},
          {"de", d.de}};
}

PhaseDifferential<double> differential_from_json(const json& j) {
  const int n = j.contains("n") ? integer(j["n"], "n") : 1;
  if (n < 1) throw UsageError("field 'n' must be positive");
  const double c = j.contains("c") ? number(j["c"], "c") : 1.0;
  if (!(c > 0.0)) throw UsageError("field 'c' must be positive");
  return {n,
          c,
          number(require(j, "dt"), "dt"),
          vec_field(j, "dq", n),
          vec_field(j, "dp", n),
          number(require(j, "de"), "de")};
}

json to_json(const BracketTable& t) {
  json brackets = json::array();
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      const auto terms = t.terms(i, j);
      if (terms.empty()) continue;
      json js = json::array();
      for (const Term& term : terms) js.push_back({{"k", term.k}, {"coeff", term.coeff}});
      brackets.push_back({{"i", i}, {"j", j}, {"terms", js}});
    }
  auto scale = [](double v) -> json {
    if (std::isinf(v)) return "inf";
    return optional_number(v);
  };
  return {{"algebra", t.algebra()}, {"n", t.n()},        {"c", scale(t.c())},
          {"b", scale(t.b())},      {"labels", t.labels()}, {"brackets", brackets}};
}

BracketTable table_from_json(const json& j) {
  const std::string algebra = require(j, "algebra").get<std::string>();
  const int n = integer(require(j, "n"), "n");
  const json& labels_json = require(j, "labels");
  if (!labels_json.is_array()) throw UsageError("field 'labels' must be an array");
  std::vector<std::string> labels;
  for (const auto& l : labels_json) {
    if (!l.is_string()) throw UsageError("field 'labels' must hold strings");
    labels.push_back(l.get<std::string>());
  }
  BracketTable t(algebra, n, number_or_nan(j, "c"), number_or_nan(j, "b"), labels);
  const json& brackets = require(j, "brackets");
  if (!brackets.is_array()) throw UsageError("field 'brackets' must be an array");
  const int d = t.dim();
  for (const auto& br : brackets) {
    const int i = integer(require(br, "i"), "i");
    const int jj = integer(require(br, "j"), "j");
    if (i < 0 || i >= d || jj < 0 || jj >= d) throw UsageError("bracket index out of range");
    for (const auto& term : require(br, "terms")) {
      const int k = integer(require(term, "k"), "k");
      if (k < 0 || k >= d) throw UsageError("term index out of range");
      t(i, jj, k) = number(require(term, "coeff"), "coeff");
    }
  }
  return t;
}

std::string table_to_csv(const BracketTable& t) {
  std::ostringstream os;
  os.precision(17);
  os << "i,j,k,bracket,result,coeff\n";
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (const Term& term : t.terms(i, j))
        os << i << "," << j << "," << term.k << ",\"" << t.pair_name(i, j) << "\","
           << t.labels()[term.k] << "," << term.coeff << "\n";
  return os.str();
}

}  // namespace nirel::io
