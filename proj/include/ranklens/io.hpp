#pragma once

#include <string>

#include <json.hpp>

#include "ranklens/model.hpp"
#include "ranklens/rationalize.hpp"
#include "ranklens/structure.hpp"

namespace ranklens::io {

using json = nlohmann::json;

// Rationals render as "p" or "p/q" in lowest terms. Throws ParseError.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

// {"n":N,"observations":[{"choice":[i,j],"cols":[...],"rows":[...]},...]}
json dataset_to_json(const DataSet& dataset);
// Throws ParseError on shape errors and the validate_dataset errors otherwise.
DataSet dataset_from_json(const json& doc);

// {"A":[["p",...],...],"B":[...],"n":N}; extra keys are ignored when parsing.
json game_to_json(const BimatrixGame& game);
BimatrixGame game_from_json(const json& doc);

json profile_to_json(const StrategyProfile& p);
json structure_to_json(const StructureReport& report, bool rationalizable);
json certificate_to_json(const RationalizationCertificate& cert);
json verification_to_json(const VerificationReport& report, std::size_t rank);

// Compact dump with sorted keys plus a trailing newline.
std::string canonical(const json& doc);

// Parses text as JSON; throws ParseError.
json parse_json(const std::string& text);

}  // namespace ranklens::io
