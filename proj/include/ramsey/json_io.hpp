#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/hamiltonicity.hpp"
#include "ramsey/witnesses.hpp"

namespace ramsey {

using Json = nlohmann::json;

// --- file payloads ---------------------------------------------------------

Json witness_to_json(const Graph& g, const WitnessColoring& w);
// The witness file carries its own graph6; pass the decoded graph in.
WitnessColoring witness_from_json(const Graph& g, const Json& j);

Json coloring_to_json(const Graph& g, const Coloring& c);
Coloring coloring_from_json(const Graph& g, const Json& j);

Json system_to_json(const NstSystem& sys);
NstSystem system_from_json(const Json& j);

Json report_to_json(const ConstructionReport& rep);
Json bound_entry_to_json(const BoundTableEntry& e);

Json extract_to_json(const ExtractOutcome& out);

// --- hashing and schema checks ----------------------------------------------

uint64_t fnv1a64(std::string_view bytes);
std::string hex64(uint64_t value);

// Minimal structural validator: type / required / properties / items / enum.
bool validate_schema(const Json& doc, const Json& schema, std::string* error = nullptr);

}  // namespace ramsey
