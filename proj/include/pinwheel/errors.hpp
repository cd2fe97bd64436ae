#pragma once

#include <stdexcept>
#include <string>

namespace pinwheel {

// All domain errors carry a stable machine-readable kind tag so the CLI can
// emit structured error objects without string-matching messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PINWHEEL_DEFINE_ERROR(Name, tag)                       \
    class Name : public Error {                                \
    public:                                                    \
        explicit Name(const std::string& message)              \
            : Error(tag, message) {}                           \
    }

PINWHEEL_DEFINE_ERROR(ChartMismatch, "chart_mismatch");
PINWHEEL_DEFINE_ERROR(UnsupportedChart, "unsupported_chart");
PINWHEEL_DEFINE_ERROR(UnsupportedModulus, "unsupported_modulus");
PINWHEEL_DEFINE_ERROR(InvalidReflection, "invalid_reflection");
PINWHEEL_DEFINE_ERROR(EpsilonOutOfRange, "epsilon_out_of_range");
PINWHEEL_DEFINE_ERROR(TriangleViolated, "triangle_violated");
PINWHEEL_DEFINE_ERROR(DegenerateInput, "degenerate_input");
PINWHEEL_DEFINE_ERROR(OutsideDomainSpan, "outside_domain_span");
PINWHEEL_DEFINE_ERROR(NotInSymplecticCone, "not_in_symplectic_cone");
PINWHEEL_DEFINE_ERROR(NonPositiveInput, "non_positive_input");
PINWHEEL_DEFINE_ERROR(UnsupportedInput, "unsupported_input");
PINWHEEL_DEFINE_ERROR(ParseError, "parse_error");
PINWHEEL_DEFINE_ERROR(IoError, "io_error");

#undef PINWHEEL_DEFINE_ERROR

// A Lagrangian-existence precondition failed; carries which class is absent.
class LagrangianAbsent : public Error {
public:
    LagrangianAbsent(std::string cls, const std::string& message)
        : Error("lagrangian_absent", message), cls_(std::move(cls)) {}
    const std::string& missing_class() const noexcept { return cls_; }

private:
    std::string cls_;
};

} // namespace pinwheel
