#pragma once

#include "pinwheel/chart.hpp"

#include <vector>

namespace pinwheel {

// Intersection pairing a . b, exact. Throws ChartMismatch on mixed charts.
Coeff pairing(const HomologyClass& a, const HomologyClass& b);

// Self-intersection a . a.
Coeff square(const HomologyClass& a);

// Evaluation of the anticanonical class: c1 . a.
Coeff c1(const HomologyClass& a);

// Whether a could be represented by an embedded sphere of its square per the
// adjunction equality c1(a) = 2 + a.a.
bool satisfies_sphere_adjunction(const HomologyClass& a);

// Coefficient-wise reduction into [0, n). Requires n >= 2.
ModClass reduce_mod(const HomologyClass& a, long long n);

// Pairing residue in [0, n). Requires n >= 2.
Coeff pairing_mod(const HomologyClass& a, const HomologyClass& b, long long n);
Coeff pairing_mod(const ModClass& a, const ModClass& b);

// Poincare dual of a period vector: the rational class pd with
// pd . e_i = values[i] for every basis class e_i.
RationalClass poincare_dual(const PeriodVector& p);

// Self-intersection of the Poincare dual (the "volume" of the period point).
Rational volume(const PeriodVector& p);

// Integral basis, in Hermite normal form, of
//   { x : x . c == 0 mod n for every c in classes }.
// This sublattice always has full rank (it contains n * Z^rank). The class
// list must be non-empty so the chart is determined.
std::vector<HomologyClass> perp_sublattice_mod(const std::vector<HomologyClass>& classes,
                                               long long n);

} // namespace pinwheel
