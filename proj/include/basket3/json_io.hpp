#pragma once

#include <nlohmann/json.hpp>

#include "basket3/enumerate.hpp"
#include "basket3/formal.hpp"
#include "basket3/ladder.hpp"

namespace basket3 {

// All emitters use ordered_json with fixed insertion order so identical
// inputs serialize to identical bytes.
using json = nlohmann::ordered_json;

json basket_to_json(const Basket& b);
// Reader canonicalizes; throws std::invalid_argument on malformed data.
Basket basket_from_json(const json& j);

json ladder_to_json(const InversionLadder& L);
json candidate_to_json(const CandidateRecord& rec);
json report_to_json(const SearchReport& report);

json constraints_to_json(const Constraints& c);
Constraints constraints_from_json(const json& j);

// {"chi": n, "values": [chi_2, chi_3, ...]}
ChiVector chi_vector_from_json(const json& j);
// plain array [n0_{1,5}, n0_{1,6}, ...]
std::vector<std::int64_t> tail_from_json(const json& j);

}  // namespace basket3
