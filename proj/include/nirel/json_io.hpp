#ifndef NIREL_JSON_IO_HPP
#define NIREL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "nirel/automorphism.hpp"
#include "nirel/heisenberg.hpp"
#include "nirel/kinematics.hpp"
#include "nirel/lie_algebra.hpp"
#include "nirel/relativity.hpp"

// JSON forms of the value types. Readers validate shape and finiteness and
// throw UsageError with the offending field named.
namespace nirel::io {

using nlohmann::json;

/// {"dim": k, "entries": [row-major]}.
json mat_to_json(const Matd& m);
Matd mat_from_json(const json& j, const char* field = "matrix");

json vec_to_json(const Vecd& v);
Vecd vec_from_json(const json& j, const char* field);

/// {"m", "z", "iota"}.
json to_json(const HeisenbergElement<double>& e);
HeisenbergElement<double> heisenberg_from_json(const json& j);

/// {"m", "epsilon", "delta", "Sigma", "z", "iota"}.
json to_json(const AutHElement<double>& w);
AutHElement<double> auth_from_json(const json& j);

/// {"n", "c", "Lambda", "Xi"}; reading validates membership.
json to_json(const UbElement<double>& g);
UbElement<double> ub_from_json(const json& j, const Tolerance& tol = kDefaultTolerance);

/// {"n", "c", "alpha", "beta", "f", "r", "m", "v"}. On input "v" may replace "beta";
/// alpha and m default to zero, and n = 1 accepts plain numbers for vectors.
json to_json(const KinematicParams<double>& p);
KinematicParams<double> params_from_json(const json& j);

/// {"n", "c", "dt", "dq", "dp", "de"}.
json to_json(const PhaseDifferential<double>& d);
PhaseDifferential<double> differential_from_json(const json& j);

/// {"algebra", "n", "c", "b", "labels", "brackets": [{"i", "j", "terms": [{"k", "coeff"}]}]}.
/// c and b are null where the algebra has no such constant.
json to_json(const BracketTable& t);
BracketTable table_from_json(const json& j);

/// Rows "i,j,k,bracket,result,coeff" with a header.
std::string table_to_csv(const BracketTable& t);

json parse(const std::string& text, const char* what);

}  // namespace nirel::io

#endif  // NIREL_JSON_IO_HPP
