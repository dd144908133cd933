#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "frecheb/approximation.hpp"
#include "frecheb/maxt.hpp"
#include "frecheb/report.hpp"

namespace frecheb {

/// Malformed input document. The message starts with the offending field path,
/// e.g. "gamma[1][0]: ...".
class DocumentError : public Error {
public:
    using Error::Error;
};

/// {"implication": "...", "gamma": [[...]], "beta": [...], "name": "..."?}
struct SystemDocument {
    std::optional<std::string> name;
    FuzzySystem system;
};

/// {"implication": "...", "a": [[...]], "b": [...], "name": "..."?}
struct MaxTDocument {
    std::optional<std::string> name;
    MaxTSystem system;
};

SystemDocument parse_system_document(const nlohmann::json& doc);
MaxTDocument parse_maxt_document(const nlohmann::json& doc);

/// Parses text; syntax errors become DocumentError.
nlohmann::json parse_json_text(const std::string& text);

nlohmann::json to_json(const SystemDocument& doc);
nlohmann::json to_json(const ConsistencyResult& c);
nlohmann::json to_json(const ChebyshevReport& report);
nlohmann::json to_json(const ApproximationResult& a);
nlohmann::json to_json(const NearApproximation& a);

}  // namespace frecheb
