#include "pinwheel/json_io.hpp"

namespace pinwheel {

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values)
        arr.push_back(rational_to_string(v));
    return arr;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& arr) {
    std::vector<Rational> values;
    for (const auto& item : arr)
        values.push_back(parse_rational(item.get<std::string>()));
    return values;
}

} // namespace

void to_json(nlohmann::json& j, const HomologyClass& cls) {
    j = nlohmann::json{{"chart", cls.chart->name()}, {"coeffs", cls.coeffs}};
}

void from_json(const nlohmann::json& j, HomologyClass& cls) {
    cls = make_class(find_chart(j.at("chart").get<std::string>()),
                     j.at("coeffs").get<std::vector<Coeff>>());
}

void to_json(nlohmann::json& j, const ModClass& cls) {
    j = nlohmann::json{{"chart", cls.chart->name()},
                       {"modulus", cls.modulus},
                       {"coeffs", cls.coeffs}};
}

void from_json(const nlohmann::json& j, ModClass& cls) {
    cls.chart = find_chart(j.at("chart").get<std::string>());
    cls.modulus = j.at("modulus").get<long long>();
    cls.coeffs = j.at("coeffs").get<std::vector<Coeff>>();
}

void to_json(nlohmann::json& j, const PeriodVector& p) {
    j = nlohmann::json{{"chart", p.chart->name()}, {"values", rationals_to_json(p.values)}};
}

void from_json(const nlohmann::json& j, PeriodVector& p) {
    p = make_periods(find_chart(j.at("chart").get<std::string>()),
                     rationals_from_json(j.at("values")));
}

void to_json(nlohmann::json& j, const ConeViolation& v) {
    j = nlohmann::json{{"constraint", v.constraint}, {"value", rational_to_string(v.value)}};
}

void to_json(nlohmann::json& j, const ConeVerdict& v) {
    j = nlohmann::json{{"inside", v.inside}, {"violated", v.violated}};
}

void to_json(nlohmann::json& j, const OrbitCertificate& cert) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& r : cert.word)
        word.push_back(r.axis());
    j = nlohmann::json{{"source", cert.source}, {"target", cert.target}, {"word", word}};
}

void to_json(nlohmann::json& j, const CanonicalForm& form) {
    j = nlohmann::json{{"representative", form.representative},
                       {"certificate", form.certificate}};
}

void to_json(nlohmann::json& j, const ClassFamily& family) {
    j = to_string(family);
}

void to_json(nlohmann::json& j, const AudinClass& cls) {
    j = nlohmann::json{{"class", cls.cls}, {"family", cls.family}};
}

void to_json(nlohmann::json& j, const TransportWitness& witness) {
    j = nlohmann::json{{"target_chart", witness.target_chart->name()},
                       {"periods", witness.periods},
                       {"eps", rationals_to_json(witness.eps)}};
}

void to_json(nlohmann::json& j, const FeasibilityReport& report) {
    j = nlohmann::json{{"feasible", report.feasible}};
    if (report.witness)
        j["witness"] = *report.witness;
    if (report.obstruction)
        j["obstruction"] = *report.obstruction;
}

void to_json(nlohmann::json& j, const RigidityAnswer& answer) {
    j = nlohmann::json{{"must_intersect", answer.must_intersect},
                       {"mode", answer.mode == DerivationMode::Computed ? "computed" : "recorded"}};
}

nlohmann::json error_object(const std::string& kind, const std::string& message) {
    return nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace pinwheel
