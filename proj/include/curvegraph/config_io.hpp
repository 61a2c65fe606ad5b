#pragma once

#include <string>

#include <json.hpp>

#include "curvegraph/bounds.hpp"
#include "curvegraph/configuration.hpp"
#include "curvegraph/spectral.hpp"

namespace curvegraph {

// A configuration file: the twist system plus optional seed/witness names for
// certification.  Absent names stay empty.
struct ConfigDocument {
    MulticurveConfiguration config;
    TwistWord word;
    std::string seed;
    std::string witness;
};

// Parse errors, missing fields, wrong types, dimension mismatches, and
// asymmetric matrices all surface as StructuralError naming the field.
ConfigDocument parse_config(const nlohmann::json& j);
ConfigDocument load_config(const std::string& path);

nlohmann::json to_json(const ConfigDocument& doc);
nlohmann::json to_json(const FamilyInstance& inst);
void save_config(const ConfigDocument& doc, const std::string& path);
void save_config(const FamilyInstance& inst, const std::string& path);

nlohmann::json rational_json(const Rational& r);
nlohmann::json to_json(const LowerBoundRecord& rec);
nlohmann::json to_json(const UpperBoundCertificate& cert);
nlohmann::json to_json(const SpectralResult& res);
nlohmann::json to_json(const ValidationReport& rep);

std::string render_text(const LowerBoundRecord& rec);
std::string render_text(const UpperBoundCertificate& cert, bool include_trace);
std::string render_text(const SpectralResult& res);
std::string render_text(const ValidationReport& rep);

} // namespace curvegraph
