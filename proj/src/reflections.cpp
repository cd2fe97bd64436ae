#include "pinwheel/reflections.hpp"

#include "pinwheel/errors.hpp"
#include "pinwheel/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pinwheel {

namespace {

// Guards against runaway orbit walks on adversarial inputs (a generic class
// on std_X8 has an orbit in the hundreds of millions). Everything this
// library enumerates stays far below the cap.
constexpr std::size_t kOrbitCap = 2'000'000;

int require_std_chart(const ChartPtr& chart) {
    const auto k = standard_xk_index(*chart);
    if (!k)
        throw UnsupportedChart("orbit operations need a std_Xk chart, got '" + chart->name() +
                               "'");
    return *k;
}

} // namespace

Reflection::Reflection(HomologyClass axis) : axis_(std::move(axis)) {
    if (square(axis_) != -2)
        throw InvalidReflection("reflection axis must have square -2, got " +
                                std::to_string(square(axis_)) + " for " + to_string(axis_));
}

HomologyClass reflect(const HomologyClass& a, const Reflection& s) {
    if (!same_chart(a.chart, s.axis().chart))
        throw ChartMismatch("reflect: class and axis on different charts");
    return a + pairing(a, s.axis()) * s.axis();
}

ModClass reflect_mod(const ModClass& a, const Reflection& s) {
    if (!same_chart(a.chart, s.axis().chart))
        throw ChartMismatch("reflect_mod: class and axis on different charts");
    const long long n = a.modulus;
    const HomologyClass lift{a.chart, a.coeffs};
    const Coeff factor = pairing_mod(lift, s.axis(), n);
    std::vector<Coeff> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Coeff v = (a.coeffs[i] + factor * s.axis().coeffs[i]) % n;
        out[i] = v < 0 ? v + n : v;
    }
    return ModClass{a.chart, n, std::move(out)};
}

bool OrbitCertificate::verify() const {
    return apply_word(word, source) == target;
}

HomologyClass apply_word(const std::vector<Reflection>& word, const HomologyClass& a) {
    HomologyClass r = a;
    for (const auto& s : word)
        r = reflect(r, s);
    return r;
}

const std::vector<Reflection>& std_generators(int k) {
    static std::map<int, std::vector<Reflection>> cache;
    auto it = cache.find(k);
    if (it != cache.end())
        return it->second;

    const ChartPtr chart = std_xk_chart(k);
    std::vector<Reflection> gens;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            std::vector<Coeff> c(k + 1, 0);
            c[i] = 1;
            c[j] = -1;
            gens.emplace_back(make_class(chart, std::move(c)));
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (int l = j + 1; l <= k; ++l) {
                std::vector<Coeff> c(k + 1, 0);
                c[0] = 1;
                c[i] = c[j] = c[l] = -1;
                gens.emplace_back(make_class(chart, std::move(c)));
            }
        }
    }
    for (const auto& g : gens) {
        if (square(g.axis()) != -2 || c1(g.axis()) != 0)
            throw std::logic_error("std generator must have square -2 and pair to 0 with c1");
    }
    return cache.emplace(k, std::move(gens)).first->second;
}

namespace {

// Breadth-first orbit walk with parent tracking. parent[v] = (u, gen index)
// with v = reflect(u, gen); the source maps to gen index -1.
struct OrbitWalk {
    std::map<std::vector<Coeff>, std::pair<std::vector<Coeff>, int>> parent;
    std::vector<Coeff> minimum;

    OrbitWalk(const HomologyClass& a, const std::vector<Reflection>& gens) {
        const ChartPtr chart = a.chart;
        parent.emplace(a.coeffs, std::make_pair(std::vector<Coeff>{}, -1));
        minimum = a.coeffs;
        std::deque<std::vector<Coeff>> queue{a.coeffs};
        while (!queue.empty()) {
            const std::vector<Coeff> cur = std::move(queue.front());
            queue.pop_front();
            const HomologyClass cls{chart, cur};
            for (std::size_t g = 0; g < gens.size(); ++g) {
                std::vector<Coeff> next = reflect(cls, gens[g]).coeffs;
                if (parent.count(next))
                    continue;
                if (parent.size() >= kOrbitCap)
                    throw UnsupportedInput("orbit of " + to_string(a) + " exceeds " +
                                           std::to_string(kOrbitCap) + " classes");
                if (next < minimum)
                    minimum = next;
                parent.emplace(next, std::make_pair(cur, static_cast<int>(g)));
                queue.push_back(std::move(next));
            }
        }
    }

    // Word mapping the source onto `to`, read off the BFS tree.
    std::vector<Reflection> word_to(const std::vector<Coeff>& to,
                                    const std::vector<Reflection>& gens) const {
        std::vector<int> steps;
        std::vector<Coeff> cur = to;
        while (true) {
            const auto& [prev, g] = parent.at(cur);
            if (g < 0)
                break;
            steps.push_back(g);
            cur = prev;
        }
        std::reverse(steps.begin(), steps.end());
        std::vector<Reflection> word;
        word.reserve(steps.size());
        for (int g : steps)
            word.push_back(gens[g]);
        return word;
    }
};

} // namespace

CanonicalForm canonicalize(const HomologyClass& a) {
    const int k = require_std_chart(a.chart);
    const auto& gens = std_generators(k);
    const OrbitWalk walk(a, gens);
    HomologyClass rep = make_class(a.chart, walk.minimum);
    OrbitCertificate cert{walk.word_to(walk.minimum, gens), a, rep};
    return CanonicalForm{std::move(rep), std::move(cert)};
}

std::vector<HomologyClass> full_orbit(const HomologyClass& a) {
    const int k = require_std_chart(a.chart);
    const OrbitWalk walk(a, std_generators(k));
    std::vector<HomologyClass> orbit;
    orbit.reserve(walk.parent.size());
    for (const auto& [coeffs, ignored] : walk.parent)
        orbit.push_back(make_class(a.chart, coeffs));
    return orbit; // std::map iteration is already sorted
}

bool same_orbit(const HomologyClass& a, const HomologyClass& b) {
    if (!same_chart(a.chart, b.chart))
        throw ChartMismatch("same_orbit: classes on different charts");
    return canonicalize(a).representative == canonicalize(b).representative;
}

std::optional<OrbitCertificate> same_orbit_certificate(const HomologyClass& a,
                                                       const HomologyClass& b) {
    if (!same_chart(a.chart, b.chart))
        throw ChartMismatch("same_orbit: classes on different charts");
    const CanonicalForm ca = canonicalize(a);
    const CanonicalForm cb = canonicalize(b);
    if (!(ca.representative == cb.representative))
        return std::nullopt;
    // a -> canonical via ca's word, then canonical -> b by replaying cb's
    // word backwards (each reflection is an involution).
    std::vector<Reflection> word = ca.certificate.word;
    word.insert(word.end(), cb.certificate.word.rbegin(), cb.certificate.word.rend());
    return OrbitCertificate{std::move(word), a, b};
}

ModClass canonicalize_mod(const ModClass& a) {
    const int k = require_std_chart(a.chart);
    if (a.modulus != 2 && a.modulus != 3)
        throw UnsupportedModulus("canonicalize_mod supports modulus 2 or 3, got " +
                                 std::to_string(a.modulus));
    const auto& gens = std_generators(k);
    std::map<std::vector<Coeff>, bool> seen;
    seen.emplace(a.coeffs, true);
    std::vector<Coeff> minimum = a.coeffs;
    std::deque<std::vector<Coeff>> queue{a.coeffs};
    while (!queue.empty()) {
        const std::vector<Coeff> cur = std::move(queue.front());
        queue.pop_front();
        const ModClass cls{a.chart, a.modulus, cur};
        for (const auto& g : gens) {
            std::vector<Coeff> next = reflect_mod(cls, g).coeffs;
            if (seen.count(next))
                continue;
            if (next < minimum)
                minimum = next;
            seen.emplace(next, true);
            queue.push_back(std::move(next));
        }
    }
    return ModClass{a.chart, a.modulus, std::move(minimum)};
}

} // namespace pinwheel
