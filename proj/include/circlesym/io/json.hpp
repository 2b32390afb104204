#pragma once

#include <string>

#include <json.hpp>

#include "circlesym/classifier.hpp"
#include "circlesym/complete_intersection.hpp"
#include "circlesym/localization/configuration.hpp"
#include "circlesym/localization/search.hpp"
#include "circlesym/localization/verify.hpp"

namespace circlesym::io {

using Json = nlohmann::json;

/// Reads a configuration document. Throws SchemaError naming the first
/// offending key path (unknown key, missing key, non-integer, bad value).
localization::Configuration config_from_json(const Json& doc);
/// Parses text first; syntax errors are reported at path "$".
localization::Configuration config_from_text(const std::string& text);

Json config_to_json(const localization::Configuration& cfg);
Json residual_to_json(const localization::Residual& r);
Json report_to_json(const localization::VerificationReport& report,
                    const localization::Configuration& cfg);
Json invariants_to_json(const InvariantReport& inv);
Json verdict_to_json(const SymmetryVerdict& v);
Json search_to_json(const localization::SearchOptions& opt, const localization::SearchResult& r);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& v);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render(const Json& doc);

}  // namespace circlesym::io
