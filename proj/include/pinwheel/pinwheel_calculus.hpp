#pragma once

#include "pinwheel/chart.hpp"
#include "pinwheel/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pinwheel {

// Periods on a target chart produced by a blow-up style transport, together
// with the auxiliary sphere areas (one or two epsilons, all positive). Which
// cone the periods are guaranteed to satisfy is documented on the producing
// operation.
struct TransportWitness {
    ChartPtr target_chart;
    PeriodVector periods;
    std::vector<Rational> eps;
};

struct FeasibilityReport {
    bool feasible = false;
    std::optional<TransportWitness> witness;    // present iff feasible
    std::optional<std::string> obstruction;     // present iff infeasible
};

// --- Lagrangian projective planes in X3 ------------------------------------
//
// All three predicates take X3 periods (h; mu1, mu2, mu3) and require the
// point to lie in the symplectic cone.

// A Lagrangian projective plane in the class E1+E2+E3 exists iff the mu
// satisfy the strict triangle inequality: mu_k < mu_i + mu_j for all k.
bool rp2_exists_sum(const Rational& h, const std::vector<Rational>& mu);

// A Lagrangian projective plane in the class H exists iff mu_k < h/2 for
// all k.
bool rp2_exists_H(const Rational& h, const std::vector<Rational>& mu);

// Both planes exist (error otherwise, naming the absent one) and can be made
// disjoint iff mu1 + mu2 + mu3 < h, strictly.
bool rp2_disjoinable(const Rational& h, const std::vector<Rational>& mu);

// Constructive counterpart of rp2_disjoinable: either a Kahler-cone witness
// on the X5 special chart for the double blow-up (alpha = 2h, beta = h/2 -
// eps1, mu~ from the transport below), or the obstruction that the beta
// window (mu~0, h/2) is empty. Same preconditions as rp2_disjoinable.
FeasibilityReport two_rp2_witness(const Rational& h, const std::vector<Rational>& mu);

// --- Period transport for the single blow-up X3 -> X4 -----------------------
//
// Blowing up the plane in E1+E2+E3 turns X3 periods (h; mu) into X4 periods
// (h; mu~0..mu~3) with
//   mu~0 = (mu1+mu2+mu3)/2 + eps,   mu~k = (mu_i+mu_j-mu_k)/2 - eps,
// where 4*eps is the area of the resulting (-4)-sphere. Requires the strict
// triangle inequality and 0 < eps < min_k(mu_i+mu_j-mu_k)/2, which makes
// every mu~ positive (the h period rides along unchanged). eps holds {eps}.
TransportWitness transport_rp2_blowup(const Rational& h, const std::vector<Rational>& mu,
                                      const Rational& eps);

// Inverse of the transport: recovers (mu1..mu3, eps) from (mu~0..mu~3).
// Requires all mu~ positive and mu~0 - mu~1 - mu~2 - mu~3 > 0; then
// eps = (mu~0 - mu~1 - mu~2 - mu~3)/4 and
// mu_k = (mu~0 + mu~i + mu~j - mu~k)/2.
std::pair<std::vector<Rational>, Rational>
transport_rp2_blowdown(const std::vector<Rational>& mu_tilde);

// The homological identification between the plane complement in X3 and the
// (-4)-sphere complement in X4, on the sublattice spanned by
// {E1-E2, E2-E3, 2*E1}:
//   2*E_i |-> E~0 - E~i + E~j + E~k,   E_i - E_j |-> E~j - E~i,
// written on std_X4 as E~i = E(i+1). The map is a lattice isometry and
// matches areas when the target periods come from transport_rp2_blowup.
HomologyClass rp2_complement_map(const HomologyClass& cls);

// --- L(3,1) pinwheels in S2xS2 ----------------------------------------------

// X3 periods of the double blow-up of S2xS2 along an L(3,1) pinwheel in
// A+B, where 9*eps1 and 9*eps2 are the areas of the two new spheres:
//   h   = a + b + 3*eps1 - 3*eps2
//   mu1 = 2(a+b)/3 + 5*eps1 - 2*eps2
//   mu2 = (2a-b)/3 - (eps1 + 5*eps2)
//   mu3 = (2b-a)/3 - (eps1 + 5*eps2)
// All four inputs must be positive.
PeriodVector l31_solve(const Rational& a, const Rational& b, const Rational& eps1,
                       const Rational& eps2);

// An L(3,1) pinwheel in the class A+B exists on (S2xS2, omega_{a,b}) iff
// b/2 < a < 2b, strictly. a, b must be positive.
bool l31_exists(const Rational& a, const Rational& b);

// Constructive counterpart: a point of the X3 symplectic cone reachable by
// l31_solve with eps1 = eps2 > 0, or the violated side (mu2 or mu3).
FeasibilityReport l31_witness(const Rational& a, const Rational& b);

// --- Blow-up bookkeeping and the del Pezzo rigidity statement ---------------

enum class PinwheelType { L21, L31 };

// Diffeomorphism type after rationally blowing up each listed pinwheel:
// L(n,1) adds n-1 to b2 (one new sphere for n=2, two for n=3). The b2 = 2
// ambiguity between X1 and S2xS2 only arises for X0 with a single L(2,1),
// which yields S2xS2. Sources: std_Xk or S2xS2. Targets beyond X8 are not
// representable and raise UnsupportedInput.
ChartPtr blowup_target(const ChartPtr& source, const std::vector<PinwheelType>& pinwheels);

enum class DerivationMode { Computed, Recorded };

struct RigidityAnswer {
    bool must_intersect;
    DerivationMode mode;
};

// In the monotone del Pezzo X_k with 3 <= k <= 6, two Lagrangian projective
// planes can never be made disjoint. For k = 3 this is computed from the
// period criterion at (3; 1, 1, 1); for k = 4..6 the answer records the
// blow-down induction, which is geometric and outside this library's scope.
// k = 7, 8 are open and raise UnsupportedInput.
RigidityAnswer del_pezzo_rp2_pair_must_intersect(int k);

} // namespace pinwheel
