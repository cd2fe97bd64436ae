#include "pinwheel/enumeration.hpp"

#include "pinwheel/errors.hpp"
#include "pinwheel/intmath.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/reflections.hpp"
#include "pinwheel/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace pinwheel {

namespace {

int require_std_chart(const ChartPtr& chart) {
    const auto k = standard_xk_index(*chart);
    if (!k)
        throw UnsupportedChart("enumeration needs a std_Xk chart, got '" + chart->name() + "'");
    return *k;
}

long long isqrt_ll(long long v) {
    return static_cast<long long>(intmath::isqrt(BigInt(v)));
}

// All m in Z^count with sum(m) = total and sum(m^2) = budget, appended to
// prefix and emitted. Prunes with the same Cauchy-Schwarz bound that makes
// the search finite in the first place.
void fill_tail(std::vector<Coeff>& prefix, int count, long long total, long long budget,
               std::vector<std::vector<Coeff>>& out) {
    if (count == 0) {
        if (total == 0 && budget == 0)
            out.push_back(prefix);
        return;
    }
    const long long bound = isqrt_ll(budget);
    for (long long v = -bound; v <= bound; ++v) {
        const long long rest_total = total - v;
        const long long rest_budget = budget - v * v;
        if (rest_budget < 0)
            continue;
        if (rest_total * rest_total > static_cast<long long>(count - 1) * rest_budget)
            continue; // also rejects count==1 with leftovers
        prefix.push_back(v);
        fill_tail(prefix, count - 1, rest_total, rest_budget, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<Coeff>> classes_for_degree(int k, Coeff square, Coeff c1_val,
                                                   long long d) {
    std::vector<std::vector<Coeff>> out;
    const long long total = c1_val - 3 * d;  // sum of E-coefficients
    const long long budget = d * d - square; // sum of squared E-coefficients
    if (budget < 0)
        return out;
    if (total * total > static_cast<long long>(k) * budget)
        return out;
    std::vector<Coeff> prefix{d};
    fill_tail(prefix, k, total, budget, out);
    return out;
}

} // namespace

std::vector<HomologyClass> enumerate_by_invariants(const EnumQuery& query) {
    const int k = require_std_chart(query.chart);
    const Coeff s = query.square;
    const Coeff c = query.c1;

    std::vector<HomologyClass> result;
    if (k == 0) {
        // Classes are d*H with d^2 = square and 3d = c1.
        if (c % 3 == 0) {
            const Coeff d = c / 3;
            if (d * d == s)
                result.push_back(make_class(query.chart, {d}));
        }
        return result;
    }

    // Degree bound: (9-k) d^2 - 6 c d + (c^2 + k s) <= 0.
    const BigInt disc = BigInt(k) * (BigInt(c) * c - BigInt(9 - k) * s);
    if (disc < 0)
        return result;
    const BigInt sq = intmath::isqrt(disc);
    // Conservative integer window, then filter by the exact inequality.
    const long long lo = static_cast<long long>((BigInt(3) * c - sq) / (9 - k)) - 2;
    const long long hi = static_cast<long long>((BigInt(3) * c + sq) / (9 - k)) + 2;

    std::vector<long long> degrees;
    for (long long d = lo; d <= hi; ++d) {
        const BigInt lhs = BigInt(9 - k) * d * d - BigInt(6) * c * d + (BigInt(c) * c + BigInt(k) * s);
        if (lhs <= 0)
            degrees.push_back(d);
    }

    // Partition by degree; each block is independent and internally sorted,
    // and blocks concatenate in lexicographic order.
    std::vector<std::future<std::vector<std::vector<Coeff>>>> futures;
    futures.reserve(degrees.size());
    for (const long long d : degrees)
        futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                     classes_for_degree, k, s, c, d));
    for (auto& f : futures)
        for (auto& coeffs : f.get())
            result.push_back(make_class(query.chart, std::move(coeffs)));
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<HomologyClass> enumerate_exceptional(int k) {
    if (k < 0 || k > 8)
        throw UnsupportedChart("enumerate_exceptional needs 0 <= k <= 8, got " +
                               std::to_string(k));
    return enumerate_by_invariants({std_xk_chart(k), -1, 1});
}

std::string to_string(FamilyLabel label) {
    switch (label) {
    case FamilyLabel::E: return "E";
    case FamilyLabel::HEE: return "H-E-E";
    case FamilyLabel::TwoH5E: return "2H-5E";
    case FamilyLabel::ThreeH2E6E: return "3H-2E-6E";
    case FamilyLabel::RP2_H: return "RP2_H";
    case FamilyLabel::RP2_3E: return "RP2_3E";
    case FamilyLabel::RP2_H4E: return "RP2_H4E";
    case FamilyLabel::RP2_7E: return "RP2_7E";
    case FamilyLabel::RP2_H8E: return "RP2_H8E";
    }
    return "?";
}

std::string to_string(const ClassFamily& family) {
    std::ostringstream out;
    out << to_string(family.label);
    if (!family.double_indices.empty() || !family.single_indices.empty()) {
        out << "(";
        bool first = true;
        for (int i : family.double_indices) {
            out << (first ? "" : ",") << "2*" << i;
            first = false;
        }
        for (int i : family.single_indices) {
            out << (first ? "" : ",") << i;
            first = false;
        }
        out << ")";
    }
    return out.str();
}

std::optional<ClassFamily> classify_exceptional(const HomologyClass& cls) {
    require_std_chart(cls.chart);
    std::vector<int> minus_one, minus_two, plus_one, other;
    for (std::size_t i = 1; i < cls.coeffs.size(); ++i) {
        switch (cls.coeffs[i]) {
        case 0: break;
        case -1: minus_one.push_back(static_cast<int>(i)); break;
        case -2: minus_two.push_back(static_cast<int>(i)); break;
        case 1: plus_one.push_back(static_cast<int>(i)); break;
        default: other.push_back(static_cast<int>(i)); break;
        }
    }
    if (!other.empty())
        return std::nullopt;
    const Coeff d = cls.coeffs[0];
    if (d == 0 && plus_one.size() == 1 && minus_one.empty() && minus_two.empty())
        return ClassFamily{FamilyLabel::E, {}, plus_one};
    if (d == 1 && plus_one.empty() && minus_one.size() == 2 && minus_two.empty())
        return ClassFamily{FamilyLabel::HEE, {}, minus_one};
    if (d == 2 && plus_one.empty() && minus_one.size() == 5 && minus_two.empty())
        return ClassFamily{FamilyLabel::TwoH5E, {}, minus_one};
    if (d == 3 && plus_one.empty() && minus_one.size() == 6 && minus_two.size() == 1)
        return ClassFamily{FamilyLabel::ThreeH2E6E, minus_two, minus_one};
    return std::nullopt;
}

std::vector<HomologyClass> enumerate_negative_sphere_reps(int k, int n) {
    if (k < 1 || k > 8)
        throw UnsupportedChart("enumerate_negative_sphere_reps needs 1 <= k <= 8, got " +
                               std::to_string(k));
    if (n < 1)
        throw DegenerateInput("sphere square parameter must satisfy n >= 1");
    const std::vector<HomologyClass> classes =
        enumerate_by_invariants({std_xk_chart(k), -n, 2 - n});

    // classes is the complete (square, c1) list, so every orbit is contained
    // in it; scanning in lexicographic order means the first unseen class of
    // each orbit is already its canonical representative.
    std::set<std::vector<Coeff>> assigned;
    std::vector<HomologyClass> reps;
    for (const auto& cls : classes) {
        if (assigned.count(cls.coeffs))
            continue;
        const std::vector<HomologyClass> orbit = full_orbit(cls);
        if (!(orbit.front() == cls))
            throw std::logic_error("orbit scan order violated lexicographic minimality");
        for (const auto& member : orbit)
            assigned.insert(member.coeffs);
        reps.push_back(cls);
    }
    return reps;
}

std::vector<AudinClass> audin_admissible(int k) {
    if (k < 0 || k > 8)
        throw UnsupportedChart("audin_admissible needs 0 <= k <= 8, got " + std::to_string(k));
    const ChartPtr chart = std_xk_chart(k);
    std::vector<AudinClass> out;
    for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
        std::vector<Coeff> r(k + 1);
        int weight = 0;
        for (int i = 0; i <= k; ++i) {
            r[i] = (mask >> i) & 1u;
            if (i > 0 && r[i])
                ++weight;
        }
        const Coeff d = r[0];
        // Square of the 0/1 lift is d - weight; admissible iff = 1 mod 4.
        if (((d - weight) % 4 + 4) % 4 != 1)
            continue;
        ClassFamily family{FamilyLabel::RP2_H, {}, {}};
        std::vector<int> singles;
        for (int i = 1; i <= k; ++i)
            if (r[i])
                singles.push_back(i);
        if (d == 1 && weight == 0)
            family = ClassFamily{FamilyLabel::RP2_H, {}, {}};
        else if (d == 0 && weight == 3)
            family = ClassFamily{FamilyLabel::RP2_3E, {}, singles};
        else if (d == 1 && weight == 4)
            family = ClassFamily{FamilyLabel::RP2_H4E, {}, singles};
        else if (d == 0 && weight == 7)
            family = ClassFamily{FamilyLabel::RP2_7E, {}, singles};
        else if (d == 1 && weight == 8)
            family = ClassFamily{FamilyLabel::RP2_H8E, {}, singles};
        else
            throw std::logic_error("mod-4 admissible residue outside the five family shapes");
        out.push_back(AudinClass{ModClass{chart, 2, std::move(r)}, std::move(family)});
    }
    // Scan order (H-coefficient varying fastest) puts H itself first.
    return out;
}

namespace {

using PairState = std::pair<std::vector<Coeff>, std::vector<Coeff>>;

PairState normalize_pair(std::vector<Coeff> a, std::vector<Coeff> b) {
    if (b < a)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

} // namespace

std::vector<std::pair<ModClass, ModClass>> disjoint_rp2_class_pairs(int k) {
    if (k < 3 || k > 8)
        throw UnsupportedChart("disjoint_rp2_class_pairs needs 3 <= k <= 8, got " +
                               std::to_string(k));
    const ChartPtr chart = std_xk_chart(k);
    const auto& gens = std_generators(k);
    const std::vector<AudinClass> admissible = audin_admissible(k);

    std::vector<PairState> candidates;
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible.size(); ++j) {
            if (pairing_mod(admissible[i].cls, admissible[j].cls) != 0)
                continue;
            candidates.push_back(
                normalize_pair(admissible[i].cls.coeffs, admissible[j].cls.coeffs));
        }
    }

    // Orbit reduction under the diagonal mod-2 action; one BFS per orbit,
    // memoized so shared orbits are walked once.
    std::map<PairState, PairState> canonical_of;
    std::set<PairState> reps;
    for (const auto& start : candidates) {
        if (canonical_of.count(start))
            continue;
        std::set<PairState> orbit{start};
        std::deque<PairState> queue{start};
        PairState minimum = start;
        while (!queue.empty()) {
            const PairState cur = std::move(queue.front());
            queue.pop_front();
            const ModClass first{chart, 2, cur.first};
            const ModClass second{chart, 2, cur.second};
            for (const auto& g : gens) {
                PairState next = normalize_pair(reflect_mod(first, g).coeffs,
                                                reflect_mod(second, g).coeffs);
                if (orbit.count(next))
                    continue;
                if (next < minimum)
                    minimum = next;
                orbit.insert(next);
                queue.push_back(std::move(next));
            }
        }
        for (const auto& state : orbit)
            canonical_of.emplace(state, minimum);
        reps.insert(minimum);
    }

    std::vector<std::pair<ModClass, ModClass>> out;
    out.reserve(reps.size());
    for (const auto& rep : reps)
        out.emplace_back(ModClass{chart, 2, rep.first}, ModClass{chart, 2, rep.second});
    return out;
}

std::pair<ModClass, ModClass> canonical_pair_mod2(const ModClass& a, const ModClass& b) {
    if (!same_chart(a.chart, b.chart))
        throw ChartMismatch("canonical_pair_mod2 needs both classes on one chart");
    if (a.modulus != 2 || b.modulus != 2)
        throw DegenerateInput("canonical_pair_mod2 is defined for modulus 2");
    const auto k = standard_xk_index(*a.chart);
    if (!k)
        throw UnsupportedChart("canonical_pair_mod2 supports std_Xk charts only");
    const auto& gens = std_generators(*k);
    const PairState start = normalize_pair(a.coeffs, b.coeffs);
    std::set<PairState> seen{start};
    std::deque<PairState> queue{start};
    PairState minimum = start;
    while (!queue.empty()) {
        const PairState cur = std::move(queue.front());
        queue.pop_front();
        const ModClass first{a.chart, 2, cur.first};
        const ModClass second{a.chart, 2, cur.second};
        for (const auto& g : gens) {
            PairState next = normalize_pair(reflect_mod(first, g).coeffs,
                                            reflect_mod(second, g).coeffs);
            if (seen.count(next))
                continue;
            if (next < minimum)
                minimum = next;
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }
    return {ModClass{a.chart, 2, minimum.first}, ModClass{a.chart, 2, minimum.second}};
}

// ---- disk cache ----------------------------------------------------------

EnumerationCache::EnumerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

namespace {

std::string cache_file_name(const EnumQuery& query) {
    std::ostringstream name;
    name << query.chart->name() << "_sq" << query.square << "_c1" << query.c1 << ".json";
    return name.str();
}

} // namespace

std::optional<std::vector<HomologyClass>> EnumerationCache::load(const EnumQuery& query) const {
    const std::filesystem::path path = dir_ / cache_file_name(query);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("chart").get<std::string>() != query.chart->name() ||
            doc.at("square").get<Coeff>() != query.square ||
            doc.at("c1").get<Coeff>() != query.c1 ||
            doc.at("tool_version").get<std::string>() != kToolVersion)
            return std::nullopt;
        std::vector<HomologyClass> classes;
        for (const auto& row : doc.at("classes"))
            classes.push_back(make_class(query.chart, row.get<std::vector<Coeff>>()));
        return classes;
    } catch (const std::exception&) {
        return std::nullopt; // unreadable or stale cache entries are recomputed
    }
}

void EnumerationCache::store(const EnumQuery& query,
                             const std::vector<HomologyClass>& classes) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw IoError("cannot create cache directory '" + dir_.string() + "': " + ec.message());

    nlohmann::json doc;
    doc["schema"] = kSchemaTag;
    doc["chart"] = query.chart->name();
    doc["square"] = query.square;
    doc["c1"] = query.c1;
    doc["tool_version"] = kToolVersion;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cls : classes)
        rows.push_back(cls.coeffs);
    doc["classes"] = std::move(rows);

    const std::filesystem::path final_path = dir_ / cache_file_name(query);
    const std::filesystem::path tmp_path =
        dir_ / (cache_file_name(query) + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp_path);
        if (!out)
            throw IoError("cannot write cache file '" + tmp_path.string() + "'");
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::filesystem::remove(tmp_path);
        throw IoError("cannot finalize cache file '" + final_path.string() + "': " + ec.message());
    }
}

std::filesystem::path default_cache_dir() {
    if (const char* override_dir = std::getenv("PINWHEEL_CACHE_DIR"))
        return std::filesystem::path(override_dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "pinwheel-lattice";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "pinwheel-lattice";
    return std::filesystem::temp_directory_path() / "pinwheel-lattice";
}

std::vector<HomologyClass> enumerate_by_invariants_cached(const EnumQuery& query,
                                                          const EnumerationCache& cache) {
    if (auto cached = cache.load(query))
        return std::move(*cached);
    std::vector<HomologyClass> classes = enumerate_by_invariants(query);
    cache.store(query, classes);
    return classes;
}

} // namespace pinwheel
