#pragma once

#include <string>

#include "mbig/bigness.hpp"
#include "mbig/rootdata.hpp"

#include "json.hpp"

namespace mbig {

// Group input format: { "p": int, "e": int, "n": int, "generators":
// [ [[entry, ...], ...], ... ] } where an entry is a bare integer over a
// prime field and a coefficient array [c0, c1, ...] over an extension.
GroupSpec parse_group_spec(const std::string& text);

nlohmann::ordered_json felem_json(const Field& f, felem a);
felem felem_from_json(const Field& f, const nlohmann::json& j);

nlohmann::ordered_json certificate_json(const BignessCertificate& c, const Field& f);
nlohmann::ordered_json torus_json(const TorusElement& t);
nlohmann::ordered_json audit_json(const AuditReport& r);

} // namespace mbig
