#pragma once

#include "pinwheel/chart.hpp"

#include <optional>
#include <vector>

namespace pinwheel {

// Reflection along a class S of square -2, acting on homology by
// x -> x + (x.S) S. Only square -2 axes are admitted; the formula is the
// homological action of a Dehn twist in a (-2)-sphere.
class Reflection {
public:
    explicit Reflection(HomologyClass axis);
    const HomologyClass& axis() const { return axis_; }

private:
    HomologyClass axis_;
};

HomologyClass reflect(const HomologyClass& a, const Reflection& s);

// Mod-n reduction of the same action (well defined on residue vectors).
ModClass reflect_mod(const ModClass& a, const Reflection& s);

// A replayable witness: applying `word` to `source`, in order, yields
// `target`.
struct OrbitCertificate {
    std::vector<Reflection> word;
    HomologyClass source;
    HomologyClass target;

    bool verify() const;
};

HomologyClass apply_word(const std::vector<Reflection>& word, const HomologyClass& a);

// The generator set acting on std_Xk: reflections along every Ei-Ej (i<j)
// and every H-Ei-Ej-Ek (i<j<k). All generators have square -2 and pair to 0
// with c1, which is asserted when the set is built.
const std::vector<Reflection>& std_generators(int k);

struct CanonicalForm {
    HomologyClass representative;
    OrbitCertificate certificate;
};

// Lexicographically minimal coefficient vector in the orbit of `a` under the
// group generated by std_generators, with a certificate word. Exhaustive
// breadth-first orbit search with memoization: exact, deterministic,
// idempotent. Throws UnsupportedChart off the standard charts and
// UnsupportedInput if the orbit exceeds the safety cap.
CanonicalForm canonicalize(const HomologyClass& a);

// Entire orbit of `a`, sorted. Same preconditions and cap as canonicalize.
std::vector<HomologyClass> full_orbit(const HomologyClass& a);

bool same_orbit(const HomologyClass& a, const HomologyClass& b);
// nullopt when the classes are in different orbits.
std::optional<OrbitCertificate> same_orbit_certificate(const HomologyClass& a,
                                                       const HomologyClass& b);

// Lexicographically minimal element of the orbit of a residue class under
// the mod-n reduction of the reflection action (modulus 2 or 3).
ModClass canonicalize_mod(const ModClass& a);

} // namespace pinwheel
