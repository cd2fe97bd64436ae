#pragma once

#include "pinwheel/chart.hpp"
#include "pinwheel/cones.hpp"
#include "pinwheel/enumeration.hpp"
#include "pinwheel/pinwheel_calculus.hpp"
#include "pinwheel/reflections.hpp"

#include <json.hpp>

// JSON bindings for the domain types. Charts appear as their registry names;
// rationals as exact "p" / "p/q" strings. Deserialization is provided where
// documents plausibly flow back in (classes, residues, periods); verdicts,
// certificates and reports are output-only.

namespace pinwheel {

void to_json(nlohmann::json& j, const HomologyClass& cls);
void from_json(const nlohmann::json& j, HomologyClass& cls);

void to_json(nlohmann::json& j, const ModClass& cls);
void from_json(const nlohmann::json& j, ModClass& cls);

void to_json(nlohmann::json& j, const PeriodVector& p);
void from_json(const nlohmann::json& j, PeriodVector& p);

void to_json(nlohmann::json& j, const ConeViolation& v);
void to_json(nlohmann::json& j, const ConeVerdict& v);

void to_json(nlohmann::json& j, const OrbitCertificate& cert);
void to_json(nlohmann::json& j, const CanonicalForm& form);

void to_json(nlohmann::json& j, const ClassFamily& family);
void to_json(nlohmann::json& j, const AudinClass& cls);

void to_json(nlohmann::json& j, const TransportWitness& witness);
void to_json(nlohmann::json& j, const FeasibilityReport& report);
void to_json(nlohmann::json& j, const RigidityAnswer& answer);

// {"error": {"kind": ..., "message": ...}} for the CLI error channel.
nlohmann::json error_object(const std::string& kind, const std::string& message);

} // namespace pinwheel
