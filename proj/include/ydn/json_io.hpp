#pragma once

// JSON forms of the public value types.
//
//   Poly            [ {"coeff":"num/den","u":int,"z":int,"x":{"k":e,...}}, ... ]
//   AlgebraElement  {"d":,"n":,"terms":[{"levels":[{"F":m}|{"G":[i,m]}],"coeff":PolyJSON}]}
//   ESolution       {"d":,"support":[...],"values":[[re,im],...],"residual":}
//
// Terms are emitted in canonical (map) order, so serialize-parse-serialize
// is the identity.

#include <json.hpp>

#include "ydn/algebra.hpp"
#include "ydn/esystem.hpp"
#include "ydn/poly.hpp"
#include "ydn/report.hpp"

namespace ydn {

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const ESolution& s);

nlohmann::json report_to_json(const SuiteReport& r);

} // namespace ydn
