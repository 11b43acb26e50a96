#pragma once

#include <json.hpp>

#include "gforge/construct.hpp"

namespace gforge {

// JSON forms of results and certificates. Polynomials and field elements are
// stored as text in the polynomial grammar, so artifacts stay readable and
// re-parse exactly.

nlohmann::json to_json(const GroupCertificate& cert);
GroupCertificate group_certificate_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json to_json(const BBCertificate& cert);
/// Throws ParseError (bad polynomial text) or InvalidArgument (missing or mistyped keys).
BBCertificate bb_certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyResult& result);
nlohmann::json to_json(const SpecializationReport& report);
nlohmann::json to_json(const std::vector<DecompositionEntry>& decomposition);
nlohmann::json to_json(const TrinomialFamilyData& data);
nlohmann::json to_json(const SplitTrinomialResult& result);

}  // namespace gforge
