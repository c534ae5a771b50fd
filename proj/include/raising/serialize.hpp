#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "raising/identity_report.hpp"
#include "raising/polynomial.hpp"
#include "raising/ring_element.hpp"
#include "raising/tableaux.hpp"

namespace raising {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json to_json(const TPoly& p);
TPoly tpoly_from_json(const Json& j);

// {"basis", "k", "terms": [{"index", "coeff"}]} in IndexOrder.
Json to_json(const RingElement& e);
RingElement ring_element_from_json(const Json& j);

// {"variables": [...], "terms": [{"exponent": [...], "coeff": n}]}.
Json to_json(const Poly& p, const std::vector<std::string>& names);

Json to_json(const IdentityReport& r);
Json to_json(const KTableau& t);
Json to_json(const KBitableau& t);

}  // namespace raising
