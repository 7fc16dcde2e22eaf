#ifndef SNF_JSON_IO_HPP
#define SNF_JSON_IO_HPP

#include <json.hpp>

#include "snf/frontend.hpp"

namespace snf {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "solenoid-nf/1";

// Rationals travel as decimal-free "p/q" strings in every document.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Poly3& p);
Poly3 poly3_from_json(const Json& j);

Json to_json(const RatFunc3& f);
RatFunc3 ratfunc3_from_json(const Json& j);

Json to_json(const VField3& v);
VField3 vfield3_from_json(const Json& j);

Json to_json(const BasisIndex& idx);
BasisIndex basis_index_from_json(const Json& j);

Json to_json(const LieElement& e);
LieElement lie_element_from_json(const Json& j);

Json to_json(const BivarPoly& p);

Json to_json(const NFInput& in);
NFInput nf_input_from_json(const Json& j);

Json to_json(const NFReport& rep);

Json to_json(const PotentialSet& ps);

Json to_json(const CubicSystem& sys);
CubicSystem cubic_system_from_json(const Json& j);

Json to_json(const CubicNF& nf);
Json to_json(const MembershipResult& r);
Json to_json(const ExtractionResult& r);
Json to_json(const ChuaReport& rep);

/// Wraps a payload with the versioned schema tag used by the CLI.
Json with_schema(Json payload);

}  // namespace snf

#endif
