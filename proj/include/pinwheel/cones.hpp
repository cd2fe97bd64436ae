#pragma once

#include "pinwheel/chart.hpp"
#include "pinwheel/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pinwheel {

// One failed cone inequality. `cls` is set when the constraint is positivity
// of a class area; for aggregate constraints (volume, named inequalities) it
// stays empty. `value` is the offending quantity, always <= 0 here since
// every cone inequality is strict.
struct ConeViolation {
    std::string constraint;
    std::optional<HomologyClass> cls;
    Rational value;
};

struct ConeVerdict {
    bool inside = true;
    std::vector<ConeViolation> violated; // empty iff inside

    explicit operator bool() const { return inside; }
};

// Symplectic cone membership.
//   std_Xk: volume > 0 and positive area on every square -1, c1 = 1 class.
//   S2xS2:  both factor areas positive.
// All violated constraints are reported, not just the first.
ConeVerdict symplectic_cone_contains(const PeriodVector& p);

// Kahler cone of the X5 special chart, as six strict inequalities in the
// period coordinates (alpha, beta, mu0..mu3). mu_tilde must have 4 entries.
ConeVerdict kahler_cone_x5_special(const Rational& alpha, const Rational& beta,
                                   const std::vector<Rational>& mu_tilde);

// Same test, reading (alpha, beta, mu) off a period vector on X5_special.
ConeVerdict kahler_cone_x5_special(const PeriodVector& p);

// std_Xk: all mu_i equal h/3, h > 0, and the point is in the symplectic
// cone. S2xS2: both areas equal and positive.
bool is_monotone(const PeriodVector& p);

// A fixed unimodular change of basis std_X5 -> X5_special preserving the
// intersection form and c1. Any such map works for translating class data
// between the two charts; this one sends H to Zinf+3F-Et0, E1 to F-Et0,
// E2 to Zinf+2F-Et0 and E(i) to Et(i-2) for i = 3,4,5.
HomologyClass std_x5_to_special(const HomologyClass& cls);

} // namespace pinwheel
