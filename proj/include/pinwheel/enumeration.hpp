#pragma once

#include "pinwheel/chart.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pinwheel {

// A (square, c1) search on one of the standard charts. Finiteness: writing a
// class as (d; m), the constraints sum(m) = c1 - 3d and sum(m^2) = d^2 -
// square force (3d - c1)^2 <= k (d^2 - square) by Cauchy-Schwarz, which
// bounds d because 9 > k.
struct EnumQuery {
    ChartPtr chart;
    Coeff square = 0;
    Coeff c1 = 0;
};

enum class FamilyLabel {
    E,          // Ei
    HEE,        // H - Ei - Ej
    TwoH5E,     // 2H - (five distinct Ei)
    ThreeH2E6E, // 3H - 2Ej - (six distinct Ei)
    RP2_H,      // H mod 2
    RP2_3E,     // Ei + Ej + Ek mod 2
    RP2_H4E,    // H + (four Ei) mod 2
    RP2_7E,     // (seven Ei) mod 2
    RP2_H8E,    // H + (eight Ei) mod 2
};

std::string to_string(FamilyLabel label);

// Shape of a class: which named family it belongs to, with the E-indices
// involved (doubled indices listed separately).
struct ClassFamily {
    FamilyLabel label;
    std::vector<int> double_indices;
    std::vector<int> single_indices;

    bool operator==(const ClassFamily& o) const = default;
};

std::string to_string(const ClassFamily& family);

// All integral classes with the queried square and c1, sorted
// lexicographically by coefficient vector. Complete within the provable
// degree bound, i.e. complete outright.
std::vector<HomologyClass> enumerate_by_invariants(const EnumQuery& query);

// Classes of square -1 with c1 = 1.
std::vector<HomologyClass> enumerate_exceptional(int k);

// Named shape of an exceptional class, when it has one of the four listed
// shapes. Higher-degree exceptional classes (they appear from k = 8 on)
// return nullopt.
std::optional<ClassFamily> classify_exceptional(const HomologyClass& cls);

// Canonical orbit representatives of classes with square -n and c1 = 2 - n
// (the sphere-adjunction pairing), grouped under the reflection action.
std::vector<HomologyClass> enumerate_negative_sphere_reps(int k, int n);

struct AudinClass {
    ModClass cls;
    ClassFamily family;
};

// All mod-2 classes whose integral lifts have square = 1 mod 4 (the residue
// determines the square mod 4, so this is well defined), with family labels.
std::vector<AudinClass> audin_admissible(int k);

// Unordered pairs of distinct Audin-admissible classes pairing to 0 mod 2,
// one representative pair per orbit of the diagonal mod-2 reflection action.
std::vector<std::pair<ModClass, ModClass>> disjoint_rp2_class_pairs(int k);

// Lexicographically minimal form of the unordered pair {a, b} under that
// same diagonal action; lets callers test whether two pairs share an orbit.
std::pair<ModClass, ModClass> canonical_pair_mod2(const ModClass& a, const ModClass& b);

// On-disk cache of enumerate_by_invariants results, keyed by
// (chart, square, c1) and the tool version. Writes are atomic
// (temp file + rename); unreadable or mismatched files are ignored.
class EnumerationCache {
public:
    explicit EnumerationCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::optional<std::vector<HomologyClass>> load(const EnumQuery& query) const;
    void store(const EnumQuery& query, const std::vector<HomologyClass>& classes) const;

private:
    std::filesystem::path dir_;
};

// PINWHEEL_CACHE_DIR (used as-is) if set; otherwise XDG_CACHE_HOME or
// ~/.cache with a "pinwheel-lattice" subdirectory; system temp as a last
// resort.
std::filesystem::path default_cache_dir();

std::vector<HomologyClass> enumerate_by_invariants_cached(const EnumQuery& query,
                                                          const EnumerationCache& cache);

} // namespace pinwheel
