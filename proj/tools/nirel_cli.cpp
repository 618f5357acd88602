#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "nirel/json_io.hpp"
#include "nirel/verify.hpp"

using nlohmann::json;
namespace io = nirel::io;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nirel::UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Rounds every number to 10 significant digits so that paths differing only
// by floating-point noise print identically.
json rounded(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == 0.0 || !std::isfinite(v)) return 0.0 * v == 0.0 ? json(0.0) : j;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::stod(buf);
  }
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it);
    return out;
  }
  return j;
}

struct GlobalOptions {
  int n = 1;
  double c = 1.0;
  double b = 1.0;
  double tol = 0.0;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string format = "json";
};

void add_common(CLI::App* cmd, GlobalOptions& g, bool with_n = true) {
  if (with_n) cmd->add_option("--n", g.n, "spatial dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--c", g.c, "speed-of-light constant")->check(CLI::PositiveNumber);
  cmd->add_option("--b", g.b, "force constant")->check(CLI::PositiveNumber);
  cmd->add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

struct ComposeOptions {
  std::vector<std::string> files;
  bool closed_form = false;
  bool as_printed = false;
  std::optional<double> v[2], f[2], r[2], m[2];
};

nirel::KinematicParams<double> inline_params(const ComposeOptions& o, int which, const GlobalOptions& g) {
  if (g.n != 1) throw nirel::UsageError("inline parameter flags are for n = 1; pass JSON files instead");
  auto p = nirel::KinematicParams<double>::zero(1, g.c);
  if (o.v[which]) p.set_velocity(nirel::Vecd::Constant(1, *o.v[which]));
  if (o.f[which]) p.f(0) = *o.f[which];
  if (o.r[which]) p.r = *o.r[which];
  if (o.m[which]) p.m(0, 0) = *o.m[which];
  nirel::validate(p);
  return p;
}

int run_compose(const ComposeOptions& o, const GlobalOptions& g, const CLI::App& cmd) {
  if (o.closed_form && o.as_printed) throw nirel::UsageError("--closed-form and --as-printed are exclusive");
  if ((o.closed_form || o.as_printed) && g.n != 1)
    throw nirel::UsageError("the closed-form composition is defined for n = 1 only");
  nirel::KinematicParams<double> a, b;
  if (!o.files.empty()) {
    if (o.files.size() != 2) throw nirel::UsageError("compose takes exactly two parameter files");
    json ja = io::parse(read_file(o.files[0]), o.files[0].c_str());
    json jb = io::parse(read_file(o.files[1]), o.files[1].c_str());
    // Flags fill in n and c when the files leave them out.
    for (json* j : {&ja, &jb}) {
      if (!j->is_object()) throw nirel::UsageError("parameter file must hold a JSON object");
      if (!j->contains("n") && cmd.count("--n")) (*j)["n"] = g.n;
      if (!j->contains("c") && cmd.count("--c")) (*j)["c"] = g.c;
    }
    a = io::params_from_json(ja);
    b = io::params_from_json(jb);
  } else {
    a = inline_params(o, 0, g);
    b = inline_params(o, 1, g);
  }
  if ((o.closed_form || o.as_printed) && a.n != 1)
    throw nirel::UsageError("the closed-form composition is defined for n = 1 only");

  std::string method = "matrix";
  nirel::KinematicParams<double> out;
  if (o.closed_form) {
    method = "closed-form";
    out = nirel::compose_params(a, b);
  } else if (o.as_printed) {
    method = "as-printed";
    out = nirel::compose_params_as_printed(a, b);
  } else {
    out = nirel::compose_params_matrix(a, b);
  }
  json result = io::to_json(out);
  result["matrix"] = io::mat_to_json(nirel::assemble(out).realize());
  result["method"] = method;
  std::cout << rounded(result).dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite_name, const std::string& table_path, const GlobalOptions& g,
               const CLI::App& cmd) {
  nirel::verify::SuiteOptions opt;
  opt.trials = g.trials;
  opt.seed = g.seed;
  opt.tol = g.tol;
  if (cmd.count("--c")) opt.c = g.c;
  if (cmd.count("--b")) opt.b = g.b;
  const auto suite = nirel::verify::parse_suite(suite_name);
  if (!table_path.empty()) {
    if (suite != nirel::verify::Suite::Algebra && suite != nirel::verify::Suite::All)
      throw nirel::UsageError("--table applies to the algebra and all suites");
    opt.table = io::table_from_json(io::parse(read_file(table_path), table_path.c_str()));
  }
  const auto report = nirel::verify::run_suite(suite, opt);
  if (g.format == "csv") {
    std::cout << "name,max_residual,threshold,passed\n";
    std::cout.precision(17);
    for (const auto& c : report.checks)
      std::cout << c.name << "," << c.max_residual << "," << c.threshold << "," << (c.passed() ? "true" : "false") << "\n";
  } else {
    std::cout << report.to_json().dump(2) << "\n";
  }
  for (const auto& c : report.checks) {
    if (c.passed()) continue;
    std::cerr << "FAILED " << c.name << ": residual " << c.max_residual << " > " << c.threshold;
    if (c.detail.contains("failing_pairs") && !c.detail["failing_pairs"].empty())
      std::cerr << "; failing pairs " << c.detail["failing_pairs"].dump();
    std::cerr << "\n";
  }
  return report.passed() ? kExitOk : kExitFail;
}

int run_algebra(const std::string& group, const GlobalOptions& g) {
  const auto basis = nirel::build_basis(nirel::parse_algebra_name(group), g.n, g.c, g.b);
  if (g.format == "csv")
    std::cout << io::table_to_csv(basis.table);
  else
    std::cout << io::to_json(basis.table).dump(2) << "\n";
  return kExitOk;
}

int run_realize(const std::string& path, const GlobalOptions& g) {
  const json j = io::parse(read_file(path), path.c_str());
  json out;
  if (j.contains("Lambda")) {
    const auto el = io::ub_from_json(j);
    out = {{"kind", "ub"}, {"matrix", io::mat_to_json(el.realize())}, {"params", io::to_json(nirel::extract_params(el))}};
  } else if (j.contains("Sigma")) {
    const auto w = io::auth_from_json(j);
    const auto metric = nirel::SymplecticMetric<double>::identity(w.m());
    out = {{"kind", "aut_h"}, {"matrix", io::mat_to_json(nirel::auth_realize(w, metric))}};
  } else if (j.contains("iota")) {
    const auto e = io::heisenberg_from_json(j);
    const auto metric = nirel::SymplecticMetric<double>::identity(e.m());
    out = {{"kind", "heisenberg"}, {"matrix", io::mat_to_json(nirel::h_realize(e, metric))}};
  } else {
    json jp = j;
    if (jp.is_object() && !jp.contains("n")) jp["n"] = g.n;
    const auto p = io::params_from_json(jp);
    out = {{"kind", "ub"}, {"matrix", io::mat_to_json(nirel::assemble(p).realize())}, {"params", io::to_json(p)}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_transform(const std::string& params_path, const std::string& diff_path) {
  const auto p = io::params_from_json(io::parse(read_file(params_path), params_path.c_str()));
  const auto d = io::differential_from_json(io::parse(read_file(diff_path), diff_path.c_str()));
  if (d.n != p.n || d.c != p.c) throw nirel::UsageError("params and differential must share n and c");
  const auto out = nirel::transform_differential(nirel::assemble(p), d);
  json j = io::to_json(out);
  j["proper_time_sq"] = out.proper_time_sq();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noninertial relativity groups: composition, verification and algebra tables"};
  app.require_subcommand(1);
  GlobalOptions g;

  ComposeOptions co;
  auto* compose = app.add_subcommand("compose", "compose two frame changes");
  add_common(compose, g);
  compose->add_option("files", co.files, "two KinematicParams JSON files");
  compose->add_flag("--closed-form", co.closed_form, "use the n = 1 scalar group law");
  compose->add_flag("--as-printed", co.as_printed, "use the printed n = 1 formulas");
  for (int i = 0; i < 2; ++i) {
    const std::string s = std::to_string(i + 1);
    compose->add_option("--v" + s, co.v[i], "velocity of frame " + s + " (n = 1)");
    compose->add_option("--f" + s, co.f[i], "force of frame " + s + " (n = 1)");
    compose->add_option("--r" + s, co.r[i], "power of frame " + s + " (n = 1)");
    compose->add_option("--m" + s, co.m[i], "stress of frame " + s + " (n = 1)");
  }

  std::string suite, table_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, g, false);
  verify->add_option("suite", suite, "group-axioms, automorphism, metric, algebra, contraction or all")->required();
  verify->add_option("--trials", g.trials, "random trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", g.seed, "generator seed");
  verify->add_option("--tol", g.tol, "override residual thresholds")->check(CLI::NonNegativeNumber);
  verify->add_option("--table", table_path, "structure-constant table JSON to verify");

  std::string group;
  auto* algebra = app.add_subcommand("algebra", "print a structure-constant table");
  add_common(algebra, g);
  algebra->add_option("group", group, "ub_covariant, ub_three, u1n_covariant or ubc_three")->required();

  std::string realize_path;
  auto* realize = app.add_subcommand("realize", "matrix realization of an element or parameter set");
  add_common(realize, g);
  realize->add_option("file", realize_path, "element JSON")->required();

  std::string params_path, diff_path;
  auto* transform = app.add_subcommand("transform", "apply a frame change to a phase-space differential");
  transform->add_option("params", params_path, "KinematicParams JSON")->required();
  transform->add_option("differential", diff_path, "PhaseDifferential JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compose) return run_compose(co, g, *compose);
    if (*verify) return run_verify(suite, table_path, g, *verify);
    if (*algebra) return run_algebra(group, g);
    if (*realize) return run_realize(realize_path, g);
    if (*transform) return run_transform(params_path, diff_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
