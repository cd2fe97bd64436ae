#include "pinwheel/replicate.hpp"

#include "pinwheel/cones.hpp"
#include "pinwheel/enumeration.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/intmath.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/pinwheel_calculus.hpp"
#include "pinwheel/reflections.hpp"
#include "pinwheel/rng.hpp"
#include "pinwheel/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

namespace pinwheel {
namespace {

std::uint64_t fact_seed(std::uint64_t seed, const std::string& id) {
    // FNV-1a over the id, folded with the document seed: every fact draws
    // from its own stream, so --only reproduces full-run values exactly.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

HomologyClass xk(int k, std::vector<Coeff> v) { return make_class(std_xk_chart(k), std::move(v)); }

std::string render_classes(const std::vector<HomologyClass>& classes) {
    std::vector<std::string> parts;
    parts.reserve(classes.size());
    for (const auto& c : classes)
        parts.push_back(to_string(c));
    return join(parts, "; ");
}

std::string render_int_rows(const intmath::IntMat& rows, const ChartPtr& chart) {
    std::vector<HomologyClass> classes;
    for (const auto& row : rows) {
        std::vector<Coeff> v;
        v.reserve(row.size());
        for (const auto& x : row)
            v.push_back(static_cast<Coeff>(x));
        classes.push_back(make_class(chart, std::move(v)));
    }
    return render_classes(classes);
}

intmath::IntMat rows_of(const std::vector<HomologyClass>& classes) {
    intmath::IntMat rows;
    for (const auto& c : classes) {
        std::vector<BigInt> row(c.coeffs.begin(), c.coeffs.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    long long out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * (n - r + i) / i;
    return out;
}

// (h; mu) with every mu_i in (0, h/2) and the strict triangle inequality:
// such a point always lies in the symplectic cone of std_X3 and admits
// Lagrangian projective planes in both H and E1+E2+E3.
struct X3Sample {
    Rational h;
    std::vector<Rational> mu;
};

X3Sample sample_two_plane_point(Rng& rng) {
    for (;;) {
        const Rational h = rat(rng.uniform_int(1, 240), 40);
        std::vector<Rational> mu(3);
        for (auto& m : mu)
            m = h * rat(rng.uniform_int(1, 199), 400);
        const Rational sum = mu[0] + mu[1] + mu[2];
        bool triangle = true;
        for (int k = 0; k < 3; ++k)
            if (sum - 2 * mu[k] <= 0)
                triangle = false;
        if (triangle)
            return {h, mu};
    }
}

// Exhaustive odometer over [-6,6]^(k+1) coefficient boxes; the reference
// enumerator for invariant pairs whose solutions provably fit in the box.
std::vector<std::vector<Coeff>> boxed_classes(int k, Coeff target_square, Coeff target_c1) {
    std::vector<std::vector<Coeff>> out;
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, -6);
    for (;;) {
        Coeff sq = v[0] * v[0];
        Coeff c = 3 * v[0];
        for (int i = 1; i <= k; ++i) {
            sq -= v[i] * v[i];
            c += v[i];
        }
        if (sq == target_square && c == target_c1)
            out.push_back(v);
        int pos = k;
        while (pos >= 0 && v[pos] == 6) {
            v[pos] = -6;
            --pos;
        }
        if (pos < 0)
            break;
        ++v[pos];
    }
    return out;
}

class Runner {
public:
    explicit Runner(const ReplicateOptions& options) : options_(options) {
        doc_.schema = kSchemaTag;
        doc_.tool_version = kToolVersion;
        doc_.seed = options.seed;
    }

    void fact(const std::string& id, const std::string& claim, const std::string& expected,
              const std::function<std::string(Rng&)>& body) {
        if (!options_.only.empty() && id.find(options_.only) == std::string::npos)
            return;
        Rng rng(fact_seed(options_.seed, id));
        std::string computed;
        try {
            computed = body(rng);
        } catch (const Error& e) {
            computed = std::string("error ") + e.kind() + ": " + e.what();
        } catch (const std::exception& e) {
            computed = std::string("error: ") + e.what();
        }
        ReplicationFact f{id, claim, expected, computed, expected == computed};
        (f.pass ? doc_.passed : doc_.failed) += 1;
        doc_.facts.push_back(std::move(f));
    }

    ReportDocument take() { return std::move(doc_); }

private:
    ReplicateOptions options_;
    ReportDocument doc_;
};

// Collects failures; renders "ok" when empty, else a count plus the first
// failure so a red report names a concrete counterexample.
class SuiteCheck {
public:
    void expect(bool ok, const std::function<std::string()>& describe) {
        if (ok)
            return;
        ++failures_;
        if (first_.empty())
            first_ = describe();
    }
    void expect(bool ok, const std::string& describe) {
        expect(ok, [&describe] { return describe; });
    }
    std::string result() const {
        if (failures_ == 0)
            return "ok";
        return std::to_string(failures_) + " failures; first: " + first_;
    }

private:
    int failures_ = 0;
    std::string first_;
};

} // namespace

ReportDocument run_replication(const ReplicateOptions& options) {
    Runner run(options);
    const ChartPtr x3 = std_xk_chart(3);
    const ChartPtr ss = s2xs2_chart();

    // ---- intersection-form basics -----------------------------------------

    run.fact("pair-zinf-f",
             "On the X5 special chart the section and fiber classes meet once: Zinf.F = 1.", "1",
             [&](Rng&) {
                 const auto zinf = make_class(x5_special_chart(), {1, 0, 0, 0, 0, 0});
                 const auto fib = make_class(x5_special_chart(), {0, 1, 0, 0, 0, 0});
                 return std::to_string(pairing(zinf, fib));
             });

    run.fact("c1-tilde-sphere",
             "On std_X4 the class E1-E2-E3-E4 has c1 = -2, the sphere adjunction value "
             "2 + square for square -4.",
             "c1 = -2 = 2 + (-4)", [&](Rng&) {
                 const auto a = xk(4, {0, 1, -1, -1, -1});
                 std::ostringstream out;
                 out << "c1 = " << c1(a) << " = 2 + (" << square(a) << ")";
                 return out.str();
             });

    run.fact("pair-mod3-conic", "On S2xS2, (A+B).(A+2B) = 0 mod 3.", "0", [&](Rng&) {
        const auto ab = make_class(ss, {1, 1});
        const auto ab2 = make_class(ss, {1, 2});
        return std::to_string(pairing_mod(ab, ab2, 3));
    });

    run.fact("pair-mod2-plane", "On std_X3, H.(E1+E2+E3) = 0 mod 2.", "0", [&](Rng&) {
        return std::to_string(pairing_mod(xk(3, {1, 0, 0, 0}), xk(3, {0, 1, 1, 1}), 2));
    });

    run.fact("perp-mod3-s2xs2",
             "The mod-3 orthogonal sublattice of A+B in S2xS2 is spanned by A+2B and 2A+B.",
             "match", [&](Rng&) {
                 const auto basis = perp_sublattice_mod({make_class(ss, {1, 1})}, 3);
                 const auto reference = intmath::hnf_rows({{1, 2}, {2, 1}});
                 return render_int_rows(rows_of(basis), ss) == render_int_rows(reference, ss)
                            ? "match"
                            : "got " + render_classes(basis);
             });

    run.fact("perp-mod2-x3",
             "The mod-2 orthogonal sublattice of {H, E1+E2+E3} in std_X3 is spanned by "
             "2H, E1-E2, E2-E3, 2E3 and contains every Ei-Ej, every 2Ei, and 2H.",
             "match; members present", [&](Rng&) {
                 const auto basis =
                     perp_sublattice_mod({xk(3, {1, 0, 0, 0}), xk(3, {0, 1, 1, 1})}, 2);
                 const auto reference = intmath::hnf_rows(
                     {{2, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 2}});
                 if (render_int_rows(rows_of(basis), x3) != render_int_rows(reference, x3))
                     return "basis mismatch: " + render_classes(basis);
                 const intmath::IntMat rows = rows_of(basis);
                 const std::vector<std::vector<BigInt>> members = {
                     {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}, {0, 2, 0, 0},
                     {0, 0, 2, 0},  {0, 0, 0, 2},  {2, 0, 0, 0}};
                 for (const auto& m : members)
                     if (!intmath::in_row_span(rows, m))
                         return std::string("missing member");
                 return std::string("match; members present");
             });

    run.fact("adjunction-cremona-axis",
             "H-E1-E2-E3 satisfies the sphere adjunction equality c1 = 2 + square.", "true",
             [&](Rng&) { return yesno(satisfies_sphere_adjunction(xk(3, {1, -1, -1, -1}))); });

    // ---- reflection action -------------------------------------------------

    run.fact("reflect-h-cremona",
             "Reflecting H along H-E1-E2-E3 gives 2H-E1-E2-E3, whose mod-2 reduction is "
             "E1+E2+E3.",
             "2*H-E1-E2-E3 -> E1+E2+E3", [&](Rng&) {
                 const Reflection s(xk(3, {1, -1, -1, -1}));
                 const auto image = reflect(xk(3, {1, 0, 0, 0}), s);
                 return to_string(image) + " -> " + to_string(reduce_mod(image, 2));
             });

    run.fact("reflect-seven-sum",
             "Reflecting E1+...+E7 along H-E1-E2-E3 on std_X7 gives "
             "3H-2E1-2E2-2E3+E4+E5+E6+E7.",
             "3*H-2*E1-2*E2-2*E3+E4+E5+E6+E7", [&](Rng&) {
                 const Reflection s(xk(7, {1, -1, -1, -1, 0, 0, 0, 0}));
                 return to_string(reflect(xk(7, {0, 1, 1, 1, 1, 1, 1, 1}), s));
             });

    run.fact("canonical-neg5-distinct",
             "-2H+3E1 and -H-2E1+E2+E3 have distinct canonical forms on std_X3.", "distinct",
             [&](Rng&) {
                 const auto a = canonicalize(xk(3, {-2, 3, 0, 0})).representative;
                 const auto b = canonicalize(xk(3, {-1, -2, 1, 1})).representative;
                 return a == b ? "equal" : "distinct";
             });

    run.fact("same-orbit-neg5", "-2H+3E1 and -H-2E1+E2+E3 lie in different reflection orbits.",
             "false", [&](Rng&) {
                 return yesno(same_orbit(xk(3, {-2, 3, 0, 0}), xk(3, {-1, -2, 1, 1})));
             });

    run.fact("canonical-mod2-sum-h-x3",
             "E1+E2+E3 and H share a mod-2 reflection orbit on std_X3.", "equal", [&](Rng&) {
                 const auto a = canonicalize_mod(reduce_mod(xk(3, {0, 1, 1, 1}), 2));
                 const auto b = canonicalize_mod(reduce_mod(xk(3, {1, 0, 0, 0}), 2));
                 return a == b ? "equal" : "distinct";
             });

    run.fact("canonical-mod2-seven-h-x7",
             "E1+...+E7 and H share a mod-2 reflection orbit on std_X7.", "equal", [&](Rng&) {
                 const auto a = canonicalize_mod(reduce_mod(xk(7, {0, 1, 1, 1, 1, 1, 1, 1}), 2));
                 const auto b = canonicalize_mod(reduce_mod(xk(7, {1, 0, 0, 0, 0, 0, 0, 0}), 2));
                 return a == b ? "equal" : "distinct";
             });

    // ---- enumeration -------------------------------------------------------

    run.fact("exceptional-x5-conic",
             "The square -1, c1 = 1 classes on std_X5 include 2H-E1-E2-E3-E4-E5.", "present",
             [&](Rng&) {
                 const auto all = enumerate_exceptional(5);
                 const auto target = xk(5, {2, -1, -1, -1, -1, -1});
                 return std::count(all.begin(), all.end(), target) == 1 ? "present" : "absent";
             });

    run.fact("exceptional-x7-cubic",
             "The square -1, c1 = 1 classes on std_X7 include 3H-2E7-E1-...-E6, whose shape "
             "is the 3H-2E-6E family.",
             "present; 3H-2E-6E(2*7,1,2,3,4,5,6)", [&](Rng&) {
                 const auto all = enumerate_exceptional(7);
                 const auto target = xk(7, {3, -1, -1, -1, -1, -1, -1, -2});
                 if (std::count(all.begin(), all.end(), target) != 1)
                     return std::string("absent");
                 const auto family = classify_exceptional(target);
                 if (!family)
                     return std::string("present; unclassified");
                 return "present; " + to_string(*family);
             });

    run.fact("sphere-reps-x3-minus2",
             "Square -2, c1 = 0 classes on std_X3 fall into two orbits, those of E1-E2 and of "
             "H-E1-E2-E3.",
             "2 orbits; both matched", [&](Rng&) {
                 const auto reps = enumerate_negative_sphere_reps(3, 2);
                 if (reps.size() != 2)
                     return std::to_string(reps.size()) + " orbits";
                 const bool a = same_orbit(reps[0], xk(3, {0, 1, -1, 0})) ||
                                same_orbit(reps[1], xk(3, {0, 1, -1, 0}));
                 const bool b = same_orbit(reps[0], xk(3, {1, -1, -1, -1})) ||
                                same_orbit(reps[1], xk(3, {1, -1, -1, -1}));
                 return a && b ? std::string("2 orbits; both matched")
                               : std::string("2 orbits; match missing");
             });

    run.fact("sphere-reps-x3-minus5",
             "Square -5, c1 = -3 classes on std_X3 fall into three orbits, including those of "
             "-H-2E1+E2+E3 and -2H+3E1.",
             "3 orbits; listed classes in distinct orbits", [&](Rng&) {
                 const auto reps = enumerate_negative_sphere_reps(3, 5);
                 if (reps.size() != 3)
                     return std::to_string(reps.size()) + " orbits";
                 int hit_a = -1;
                 int hit_b = -1;
                 for (int i = 0; i < 3; ++i) {
                     if (same_orbit(reps[i], xk(3, {-1, -2, 1, 1})))
                         hit_a = i;
                     if (same_orbit(reps[i], xk(3, {-2, 3, 0, 0})))
                         hit_b = i;
                 }
                 if (hit_a < 0 || hit_b < 0)
                     return std::string("3 orbits; match missing");
                 return hit_a != hit_b ? std::string("3 orbits; listed classes in distinct orbits")
                                       : std::string("3 orbits; matches collide");
             });

    run.fact("sphere-reps-x4-minus4",
             "Square -4, c1 = -2 classes on std_X4 include the orbit of E1-E2-E3-E4.", "present",
             [&](Rng&) {
                 const auto reps = enumerate_negative_sphere_reps(4, 4);
                 for (const auto& rep : reps)
                     if (same_orbit(rep, xk(4, {0, 1, -1, -1, -1})))
                         return std::string("present");
                 return std::string("absent");
             });

    run.fact("audin-x0", "On std_X0 the only mod-2 class of square = 1 mod 4 is H.", "H",
             [&](Rng&) {
                 std::vector<std::string> names;
                 for (const auto& a : audin_admissible(0))
                     names.push_back(to_string(a.cls));
                 return join(names, ", ");
             });

    run.fact("audin-x3",
             "On std_X3 the mod-2 classes of square = 1 mod 4 are exactly H and E1+E2+E3.",
             "H, E1+E2+E3", [&](Rng&) {
                 std::vector<std::string> names;
                 for (const auto& a : audin_admissible(3))
                     names.push_back(to_string(a.cls));
                 return join(names, ", ");
             });

    run.fact("audin-x4-h4e",
             "On std_X4 the mod-2 classes of square = 1 mod 4 include H+E1+E2+E3+E4.", "present",
             [&](Rng&) {
                 for (const auto& a : audin_admissible(4))
                     if (a.cls.coeffs == std::vector<Coeff>{1, 1, 1, 1, 1})
                         return std::string("present");
                 return std::string("absent");
             });

    run.fact("pairs-x3",
             "On std_X3 there is exactly one orbit of unordered admissible pairs with even "
             "pairing, that of {E1+E2+E3, H}.",
             "{E1+E2+E3, H}", [&](Rng&) {
                 const auto pairs = disjoint_rp2_class_pairs(3);
                 if (pairs.size() != 1)
                     return std::to_string(pairs.size()) + " orbits";
                 return "{" + to_string(pairs[0].first) + ", " + to_string(pairs[0].second) + "}";
             });

    run.fact("pairs-x7-h-seven",
             "On std_X7 the pair {H, E1+...+E7} is admissible with even pairing; there are two "
             "pair orbits in total.",
             "2 orbits; pair represented", [&](Rng&) {
                 const auto pairs = disjoint_rp2_class_pairs(7);
                 if (pairs.size() != 2)
                     return std::to_string(pairs.size()) + " orbits";
                 const auto canonical =
                     canonical_pair_mod2(reduce_mod(xk(7, {1, 0, 0, 0, 0, 0, 0, 0}), 2),
                                         reduce_mod(xk(7, {0, 1, 1, 1, 1, 1, 1, 1}), 2));
                 for (const auto& p : pairs)
                     if (p.first == canonical.first && p.second == canonical.second)
                         return std::string("2 orbits; pair represented");
                 return std::string("2 orbits; pair missing");
             });

    run.fact("pairs-census",
             "Orbit counts of admissible even-pairing pairs for k = 3..8 are 1, 1, 1, 1, 2, 1: "
             "the {H, 3E} and {H, 7E} pair families, distinct on std_X7, merge on std_X8.",
             "1, 1, 1, 1, 2, 1", [&](Rng&) {
                 std::vector<std::string> counts;
                 for (int k = 3; k <= 8; ++k)
                     counts.push_back(std::to_string(disjoint_rp2_class_pairs(k).size()));
                 return join(counts, ", ");
             });

    run.fact("pairs-x8-merge",
             "On std_X8 the diagonal reflections in H-E1-E2-E3 then H-E4-E5-E8 carry the pair "
             "(H, E1+..+E7) to integral classes of squares 1 and -7 that reduce mod 2 to "
             "E1+E2+E3 and E6+E7+E8, so the two named pair families share one orbit; on "
             "std_X7 their canonical pairs stay distinct.",
             "x8 squares 1, -7; x8 merged: yes; x7 merged: no", [&](Rng&) {
                 const auto c8 = std_xk_chart(8);
                 auto h = xk(8, {1, 0, 0, 0, 0, 0, 0, 0, 0});
                 auto seven = xk(8, {0, 1, 1, 1, 1, 1, 1, 1, 0});
                 for (const auto& axis : {xk(8, {1, -1, -1, -1, 0, 0, 0, 0, 0}),
                                          xk(8, {1, 0, 0, 0, -1, -1, 0, 0, -1})}) {
                     const Reflection twist(axis);
                     h = reflect(h, twist);
                     seven = reflect(seven, twist);
                 }
                 const auto three_a = ModClass{c8, 2, {0, 1, 1, 1, 0, 0, 0, 0, 0}};
                 const auto three_b = ModClass{c8, 2, {0, 0, 0, 0, 0, 0, 1, 1, 1}};
                 const bool lands = canonical_pair_mod2(reduce_mod(h, 2), reduce_mod(seven, 2)) ==
                                    canonical_pair_mod2(three_a, three_b);
                 const bool x8_merged =
                     canonical_pair_mod2(ModClass{c8, 2, {1, 0, 0, 0, 0, 0, 0, 0, 0}},
                                         ModClass{c8, 2, {0, 1, 1, 1, 1, 1, 1, 1, 0}}) ==
                     canonical_pair_mod2(three_a, three_b);
                 const auto c7 = std_xk_chart(7);
                 const bool x7_merged =
                     canonical_pair_mod2(ModClass{c7, 2, {1, 0, 0, 0, 0, 0, 0, 0}},
                                         ModClass{c7, 2, {0, 1, 1, 1, 1, 1, 1, 1}}) ==
                     canonical_pair_mod2(ModClass{c7, 2, {0, 1, 1, 1, 0, 0, 0, 0}},
                                         ModClass{c7, 2, {0, 0, 0, 0, 0, 1, 1, 1}});
                 std::ostringstream out;
                 out << "x8 squares " << square(h) << ", " << square(seven)
                     << "; x8 merged: " << (lands && x8_merged ? "yes" : "no")
                     << "; x7 merged: " << (x7_merged ? "yes" : "no");
                 return out.str();
             });

    // ---- cones --------------------------------------------------------------

    run.fact("cone-x3-monotone", "(h; mu) = (3; 1,1,1) lies in the symplectic cone of std_X3.",
             "inside", [&](Rng&) {
                 const auto v = symplectic_cone_contains(periods_std(3, 3, {1, 1, 1}));
                 return v.inside ? "inside" : "outside";
             });

    run.fact("cone-s2xs2-balanced", "(a, b) = (3/2, 1) lies in the symplectic cone of S2xS2.",
             "inside", [&](Rng&) {
                 const auto v = symplectic_cone_contains(periods_s2xs2(rat(3, 2), 1));
                 return v.inside ? "inside" : "outside";
             });

    run.fact("kahler-alpha-boundary",
             "(alpha, beta, mu~) = (4, 1, (1/2, 1/10, 1/10, 1/10)) fails exactly the Kahler "
             "inequality alpha - 4*beta > 0, with value 0.",
             "outside; alpha - 4*beta > 0 (value 0)", [&](Rng&) {
                 const auto v = kahler_cone_x5_special(
                     4, 1, {rat(1, 2), rat(1, 10), rat(1, 10), rat(1, 10)});
                 if (v.inside)
                     return std::string("inside");
                 if (v.violated.size() != 1)
                     return std::to_string(v.violated.size()) + " violations";
                 return "outside; " + v.violated[0].constraint + " (value " +
                        rational_to_string(v.violated[0].value) + ")";
             });

    run.fact("kahler-mu0-boundary",
             "(alpha, beta, mu~) = (6, 1, (3/10, 1/10, 1/10, 1/10)) fails exactly the Kahler "
             "inequality mu0 - mu1 - mu2 - mu3 > 0, with value 0.",
             "outside; mu0 - mu1 - mu2 - mu3 > 0 (value 0)", [&](Rng&) {
                 const auto v = kahler_cone_x5_special(
                     6, 1, {rat(3, 10), rat(1, 10), rat(1, 10), rat(1, 10)});
                 if (v.inside)
                     return std::string("inside");
                 if (v.violated.size() != 1)
                     return std::to_string(v.violated.size()) + " violations";
                 return "outside; " + v.violated[0].constraint + " (value " +
                        rational_to_string(v.violated[0].value) + ")";
             });

    run.fact("monotone-x3", "(3; 1,1,1) is a monotone point of std_X3.", "true",
             [&](Rng&) { return yesno(is_monotone(periods_std(3, 3, {1, 1, 1}))); });

    // ---- plane disjunction, transport, lens pinwheels ------------------------

    run.fact("rp2-sum-monotone",
             "At (3; 1,1,1) a Lagrangian projective plane exists in E1+E2+E3.", "true",
             [&](Rng&) { return yesno(rp2_exists_sum(3, {1, 1, 1})); });

    run.fact("rp2-h-monotone", "At (3; 1,1,1) a Lagrangian projective plane exists in H.", "true",
             [&](Rng&) { return yesno(rp2_exists_H(3, {1, 1, 1})); });

    run.fact("rp2-disjoinable-monotone",
             "At (3; 1,1,1) the two planes cannot be disjoined: mu1+mu2+mu3 = h.", "false",
             [&](Rng&) { return yesno(rp2_disjoinable(3, {1, 1, 1})); });

    run.fact("two-rp2-monotone-obstructed",
             "At (3; 1,1,1) the witness search reports the empty beta window.",
             "infeasible; beta window empty", [&](Rng&) {
                 const auto r = two_rp2_witness(3, {1, 1, 1});
                 if (r.feasible)
                     return std::string("feasible");
                 if (r.obstruction &&
                     r.obstruction->find("beta window empty") != std::string::npos)
                     return std::string("infeasible; beta window empty");
                 return std::string("infeasible; other obstruction");
             });

    run.fact("transport-blowup-quarter",
             "Transporting (mu, eps) = ((1,1,1), 1/4) across the plane blow-up gives "
             "mu~ = (7/4, 1/4, 1/4, 1/4).",
             "7/4, 1/4, 1/4, 1/4", [&](Rng&) {
                 const auto w = transport_rp2_blowup(3, {1, 1, 1}, rat(1, 4));
                 std::vector<std::string> parts;
                 for (std::size_t i = 1; i < w.periods.values.size(); ++i)
                     parts.push_back(rational_to_string(w.periods.values[i]));
                 return join(parts, ", ");
             });

    run.fact("complement-2e1",
             "The complement identification sends 2E1 on std_X3 to E1-E2+E3+E4 on std_X4.",
             "E1-E2+E3+E4", [&](Rng&) { return to_string(rp2_complement_map(xk(3, {0, 2, 0, 0}))); });

    run.fact("lens-solve-guard", "Lens pinwheel period solving rejects eps1 = 0 as non-positive.",
             "non_positive_input", [&](Rng&) {
                 try {
                     l31_solve(1, 1, 0, rat(1, 100));
                     return std::string("no error");
                 } catch (const Error& e) {
                     return std::string(e.kind());
                 }
             });

    run.fact("l31-boundary-lambda-half",
             "No L(3,1) pinwheel in A+B exists on (S2xS2, omega_{1/2,1}): a <= b/2.", "false",
             [&](Rng&) { return yesno(l31_exists(rat(1, 2), 1)); });

    run.fact("l31-boundary-lambda-one",
             "An L(3,1) pinwheel in A+B exists on (S2xS2, omega_{1,1}).", "true",
             [&](Rng&) { return yesno(l31_exists(1, 1)); });

    run.fact("l31-boundary-lambda-two",
             "No L(3,1) pinwheel in A+B exists on (S2xS2, omega_{2,1}): a >= 2b.", "false",
             [&](Rng&) { return yesno(l31_exists(2, 1)); });

    run.fact("lens-witness-a-dominant",
             "At (a, b) = (2, 1) the lens witness search reports the mu3 side as obstruction.",
             "infeasible; mu3 side", [&](Rng&) {
                 const auto r = l31_witness(2, 1);
                 if (r.feasible)
                     return std::string("feasible");
                 if (r.obstruction && r.obstruction->rfind("mu3 side", 0) == 0)
                     return std::string("infeasible; mu3 side");
                 return std::string("infeasible; other obstruction");
             });

    run.fact("lens-witness-b-dominant",
             "At (a, b) = (1/2, 1) the lens witness search reports the mu2 side as obstruction.",
             "infeasible; mu2 side", [&](Rng&) {
                 const auto r = l31_witness(rat(1, 2), 1);
                 if (r.feasible)
                     return std::string("feasible");
                 if (r.obstruction && r.obstruction->rfind("mu2 side", 0) == 0)
                     return std::string("infeasible; mu2 side");
                 return std::string("infeasible; other obstruction");
             });

    run.fact("blowup-x3-single", "Rationally blowing up one L(2,1) pinwheel in X3 yields X4.",
             "std_X4", [&](Rng&) { return blowup_target(x3, {PinwheelType::L21})->name(); });

    run.fact("blowup-x3-double", "Rationally blowing up two L(2,1) pinwheels in X3 yields X5.",
             "std_X5", [&](Rng&) {
                 return blowup_target(x3, {PinwheelType::L21, PinwheelType::L21})->name();
             });

    run.fact("blowup-x0-plane",
             "Rationally blowing up one L(2,1) pinwheel in the plane yields S2xS2.", "S2xS2",
             [&](Rng&) { return blowup_target(std_xk_chart(0), {PinwheelType::L21})->name(); });

    run.fact("blowup-s2xs2-lens",
             "Rationally blowing up one L(3,1) pinwheel in S2xS2 yields X3.", "std_X3",
             [&](Rng&) { return blowup_target(ss, {PinwheelType::L31})->name(); });

    run.fact("del-pezzo-3-computed",
             "In the monotone X3 two Lagrangian projective planes always intersect; the answer "
             "is computed from the period criterion.",
             "true (computed)", [&](Rng&) {
                 const auto r = del_pezzo_rp2_pair_must_intersect(3);
                 return std::string(r.must_intersect ? "true" : "false") +
                        (r.mode == DerivationMode::Computed ? " (computed)" : " (recorded)");
             });

    run.fact("del-pezzo-5-recorded",
             "In the monotone X5 two Lagrangian projective planes always intersect; the answer "
             "is recorded from the blow-down induction.",
             "true (recorded)", [&](Rng&) {
                 const auto r = del_pezzo_rp2_pair_must_intersect(5);
                 return std::string(r.must_intersect ? "true" : "false") +
                        (r.mode == DerivationMode::Computed ? " (computed)" : " (recorded)");
             });

    run.fact("del-pezzo-7-open", "The k = 7 plane-pair rigidity question is not decided here.",
             "unsupported_input", [&](Rng&) {
                 try {
                     del_pezzo_rp2_pair_must_intersect(7);
                     return std::string("no error");
                 } catch (const Error& e) {
                     return std::string(e.kind());
                 }
             });

    // ---- seeded invariant suites ---------------------------------------------

    run.fact("suite-pairing-bilinear",
             "200 random classes: the pairing is symmetric and bilinear, square(a) = a.a, and "
             "pairing_mod matches the integer pairing mod n.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 for (int iter = 0; iter < 200; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(0, 8));
                     const ChartPtr chart = (iter % 5 == 4) ? ss : std_xk_chart(k);
                     const auto rank = chart->rank();
                     auto draw = [&] {
                         std::vector<Coeff> v(rank);
                         for (auto& x : v)
                             x = rng.uniform_int(-9, 9);
                         return make_class(chart, std::move(v));
                     };
                     const auto a = draw();
                     const auto b = draw();
                     const auto c = draw();
                     check.expect(pairing(a, b) == pairing(b, a), "symmetry");
                     check.expect(pairing(a + b, c) == pairing(a, c) + pairing(b, c),
                                  "additivity");
                     check.expect(pairing(3 * a, b) == 3 * pairing(a, b), "scaling");
                     check.expect(square(a) == pairing(a, a), "square definition");
                     check.expect(c1(a + b) == c1(a) + c1(b), "c1 additivity");
                     for (long long n : {2LL, 3LL}) {
                         const Coeff want = ((pairing(a, b) % n) + n) % n;
                         check.expect(pairing_mod(a, b, n) == want, "pairing_mod residue");
                         check.expect(pairing_mod(reduce_mod(a, n), reduce_mod(b, n)) == want,
                                      "reduced pairing residue");
                     }
                 }
                 return check.result();
             });

    run.fact("suite-characteristic-parity",
             "500 random classes: square(a) = c1(a) mod 2 (c1 is characteristic).", "500/500",
             [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 500; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(0, 8));
                     const ChartPtr chart = (iter % 5 == 4) ? ss : std_xk_chart(k);
                     std::vector<Coeff> v(chart->rank());
                     for (auto& x : v)
                         x = rng.uniform_int(-9, 9);
                     const auto a = make_class(chart, std::move(v));
                     const Coeff diff = square(a) - c1(a);
                     if (diff % 2 == 0)
                         ++good;
                 }
                 return std::to_string(good) + "/500";
             });

    run.fact("suite-volume-closed-form",
             "200 random std_Xk period vectors: volume equals h^2 - sum(mu_i^2).", "200/200",
             [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 200; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(0, 8));
                     const Rational h = rng.uniform_rational(-3, 6, 20);
                     std::vector<Rational> mu(k);
                     Rational q = h * h;
                     for (auto& m : mu) {
                         m = rng.uniform_rational(-3, 6, 20);
                         q -= m * m;
                     }
                     if (volume(periods_std(k, h, mu)) == q)
                         ++good;
                 }
                 return std::to_string(good) + "/200";
             });

    run.fact("suite-square-mod4",
             "200 random classes: square(a + 2w) = square(a) mod 4, so squares of mod-2 "
             "residues are well defined mod 4.",
             "200/200", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 200; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(0, 8));
                     const ChartPtr chart = std_xk_chart(k);
                     std::vector<Coeff> v(chart->rank()), w(chart->rank());
                     for (auto& x : v)
                         x = rng.uniform_int(-6, 6);
                     for (auto& x : w)
                         x = rng.uniform_int(-3, 3);
                     const auto a = make_class(chart, v);
                     const auto shifted = a + 2 * make_class(chart, w);
                     const Coeff diff = square(shifted) - square(a);
                     if (diff % 4 == 0)
                         ++good;
                 }
                 return std::to_string(good) + "/200";
             });

    run.fact("suite-perp-box-oracle",
             "The mod-2 perp of {H, E1+E2+E3} on std_X3 and the mod-3 perp of {A+B} on S2xS2 "
             "agree with exhaustive membership over the [-4,4] coefficient box, and contain "
             "n*(basis vectors).",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 {
                     const auto inputs = std::vector<HomologyClass>{xk(3, {1, 0, 0, 0}),
                                                                    xk(3, {0, 1, 1, 1})};
                     const auto basis = perp_sublattice_mod(inputs, 2);
                     const auto rows = rows_of(basis);
                     for (const auto& b : basis)
                         for (const auto& in : inputs)
                             check.expect(pairing(b, in) % 2 == 0, "basis row not orthogonal");
                     std::vector<Coeff> v(4, -4);
                     for (;;) {
                         const auto a = xk(3, {v[0], v[1], v[2], v[3]});
                         const bool wanted =
                             pairing(a, inputs[0]) % 2 == 0 && pairing(a, inputs[1]) % 2 == 0;
                         const bool got =
                             intmath::in_row_span(rows, {v[0], v[1], v[2], v[3]});
                         check.expect(wanted == got, [&] {
                             return "std_X3 box mismatch at " + to_string(a);
                         });
                         int pos = 3;
                         while (pos >= 0 && v[pos] == 4)
                             v[pos--] = -4;
                         if (pos < 0)
                             break;
                         ++v[pos];
                     }
                     for (int i = 0; i < 4; ++i) {
                         std::vector<BigInt> unit(4, 0);
                         unit[i] = 2;
                         check.expect(intmath::in_row_span(rows, unit), "2*basis missing");
                     }
                 }
                 {
                     const auto inputs = std::vector<HomologyClass>{make_class(ss, {1, 1})};
                     const auto basis = perp_sublattice_mod(inputs, 3);
                     const auto rows = rows_of(basis);
                     for (Coeff a = -4; a <= 4; ++a)
                         for (Coeff b = -4; b <= 4; ++b) {
                             const auto v = make_class(ss, {a, b});
                             const bool wanted = pairing(v, inputs[0]) % 3 == 0;
                             check.expect(intmath::in_row_span(rows, {a, b}) == wanted,
                                          "S2xS2 box mismatch");
                         }
                     for (int i = 0; i < 2; ++i) {
                         std::vector<BigInt> unit(2, 0);
                         unit[i] = 3;
                         check.expect(intmath::in_row_span(rows, unit), "3*basis missing");
                     }
                 }
                 return check.result();
             });

    run.fact("suite-reflection-invariants",
             "300 random reflections: the action preserves pairings, squares and c1, is an "
             "involution, and commutes with mod-2 and mod-3 reduction.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 for (int iter = 0; iter < 300; ++iter) {
                     // k = 1 has no classes of self-intersection -2, hence no reflections.
                     const int k = static_cast<int>(rng.uniform_int(2, 8));
                     const auto& gens = std_generators(k);
                     const auto& g =
                         gens[static_cast<std::size_t>(rng.uniform_int(0, gens.size() - 1))];
                     std::vector<Coeff> va(k + 1), vb(k + 1);
                     for (auto& x : va)
                         x = rng.uniform_int(-9, 9);
                     for (auto& x : vb)
                         x = rng.uniform_int(-9, 9);
                     const auto a = xk(k, va);
                     const auto b = xk(k, vb);
                     const auto ra = reflect(a, g);
                     const auto rb = reflect(b, g);
                     check.expect(pairing(ra, rb) == pairing(a, b), "pairing not preserved");
                     check.expect(square(ra) == square(a), "square not preserved");
                     check.expect(c1(ra) == c1(a), "c1 not preserved");
                     check.expect(reflect(ra, g) == a, "not an involution");
                     for (long long n : {2LL, 3LL})
                         check.expect(reduce_mod(ra, n) == reflect_mod(reduce_mod(a, n), g),
                                      "mod reduction does not commute");
                 }
                 return check.result();
             });

    run.fact("suite-canonical-idempotent",
             "100 random small classes on std_Xk, k <= 5: canonicalize is idempotent, lex-"
             "minimal, preserves square and c1, and its certificate replays.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 for (int iter = 0; iter < 100; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(1, 5));
                     std::vector<Coeff> v(k + 1);
                     for (auto& x : v)
                         x = rng.uniform_int(-3, 3);
                     const auto a = xk(k, v);
                     const auto form = canonicalize(a);
                     const auto& rep = form.representative;
                     check.expect(canonicalize(rep).representative == rep, "not idempotent");
                     check.expect(!(a < rep), "representative not minimal");
                     check.expect(square(rep) == square(a) && c1(rep) == c1(a),
                                  "invariants drifted");
                     check.expect(form.certificate.source == a &&
                                      form.certificate.target == rep &&
                                      form.certificate.verify(),
                                  "certificate does not replay");
                 }
                 return check.result();
             });

    run.fact("suite-orbit-equivalence",
             "50 random word-generated triples agree on orbit membership with replayable "
             "certificates; 20 pairs with different squares are never equivalent.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 for (int iter = 0; iter < 50; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(2, 5));
                     const auto& gens = std_generators(k);
                     std::vector<Coeff> v(k + 1);
                     for (auto& x : v)
                         x = rng.uniform_int(-2, 2);
                     const auto a = xk(k, v);
                     auto scramble = [&] {
                         auto out = a;
                         const int len = static_cast<int>(rng.uniform_int(0, 5));
                         for (int i = 0; i < len; ++i)
                             out = reflect(out, gens[static_cast<std::size_t>(rng.uniform_int(
                                                    0, gens.size() - 1))]);
                         return out;
                     };
                     const auto b = scramble();
                     const auto c = scramble();
                     check.expect(same_orbit(a, b) && same_orbit(b, c) && same_orbit(a, c),
                                  "orbit membership missed");
                     check.expect(canonicalize(a).representative ==
                                      canonicalize(b).representative,
                                  "canonical form not constant on the orbit");
                     const auto cert = same_orbit_certificate(a, c);
                     check.expect(cert.has_value() && cert->verify(), "certificate missing");
                 }
                 for (int iter = 0; iter < 20; ++iter) {
                     const int k = static_cast<int>(rng.uniform_int(1, 5));
                     std::vector<Coeff> v(k + 1);
                     for (auto& x : v)
                         x = rng.uniform_int(-2, 2);
                     const auto a = xk(k, v);
                     std::vector<Coeff> shifted = v;
                     shifted[0] += 1; // square changes by 2*a.H + 1, always odd
                     const auto b = xk(k, shifted);
                     check.expect(square(a) != square(b), "shifted square collides");
                     check.expect(!same_orbit(a, b), "distinct squares declared equivalent");
                     check.expect(!same_orbit_certificate(a, b).has_value(),
                                  "certificate for inequivalent classes");
                 }
                 return check.result();
             });

    run.fact("suite-x3-exceptional-orbit",
             "The six square -1, c1 = 1 classes of std_X3 form a single reflection orbit.",
             "ok", [&](Rng&) {
                 const auto orbit = full_orbit(xk(3, {0, 1, 0, 0}));
                 const auto all = enumerate_exceptional(3);
                 return orbit == all ? "ok" : "orbit differs from the exceptional list";
             });

    run.fact("suite-enumeration-box-oracle",
             "enumerate_by_invariants matches the exhaustive [-6,6] box enumerator for "
             "(square, c1) in {(-1,1), (-2,0), (-4,-2), (-5,-3)} on std_X0..std_X5, and its "
             "output is sorted, duplicate-free, and exact.",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 const std::vector<std::pair<Coeff, Coeff>> targets = {
                     {-1, 1}, {-2, 0}, {-4, -2}, {-5, -3}};
                 for (int k = 0; k <= 5; ++k) {
                     for (const auto& [s, c] : targets) {
                         const auto got =
                             enumerate_by_invariants({std_xk_chart(k), s, c});
                         std::vector<std::vector<Coeff>> coeffs;
                         for (const auto& cls : got) {
                             check.expect(square(cls) == s && c1(cls) == c, "wrong invariants");
                             coeffs.push_back(cls.coeffs);
                         }
                         check.expect(std::is_sorted(coeffs.begin(), coeffs.end()),
                                      "output not sorted");
                         check.expect(std::adjacent_find(coeffs.begin(), coeffs.end()) ==
                                          coeffs.end(),
                                      "duplicate classes");
                         const auto want = boxed_classes(k, s, c);
                         check.expect(coeffs == want, [&] {
                             return "box oracle mismatch at k = " + std::to_string(k) +
                                    ", square " + std::to_string(s);
                         });
                     }
                 }
                 return check.result();
             });

    run.fact("suite-exceptional-census",
             "Exceptional class counts for k = 0..8 are 0, 1, 3, 6, 10, 16, 27, 56, 240; all "
             "satisfy adjunction and any two distinct ones pair non-negatively.",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 const std::vector<std::size_t> counts = {0, 1, 3, 6, 10, 16, 27, 56, 240};
                 for (int k = 0; k <= 8; ++k) {
                     const auto all = enumerate_exceptional(k);
                     check.expect(all.size() == counts[static_cast<std::size_t>(k)], [&] {
                         return "count at k = " + std::to_string(k) + " is " +
                                std::to_string(all.size());
                     });
                     for (const auto& cls : all)
                         check.expect(square(cls) == -1 && c1(cls) == 1 &&
                                          satisfies_sphere_adjunction(cls),
                                      "bad exceptional class");
                     if (k == 8)
                         for (std::size_t i = 0; i < all.size(); ++i)
                             for (std::size_t j = i + 1; j < all.size(); ++j)
                                 check.expect(pairing(all[i], all[j]) >= 0, [&] {
                                     return "negative pairing " + to_string(all[i]) + " . " +
                                            to_string(all[j]);
                                 });
                 }
                 return check.result();
             });

    run.fact("suite-audin-structure",
             "For k = 0..8 the admissible mod-2 classes are nonzero, closed under every "
             "reflection generator, and their family tally is 1, C(k,3), C(k,4), C(k,7), "
             "C(k,8).",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 for (int k = 0; k <= 8; ++k) {
                     const auto all = audin_admissible(k);
                     std::set<std::vector<Coeff>> members;
                     long long tally[5] = {0, 0, 0, 0, 0};
                     for (const auto& a : all) {
                         check.expect(a.cls.coeffs != std::vector<Coeff>(k + 1, 0),
                                      "zero class admitted");
                         members.insert(a.cls.coeffs);
                         tally[static_cast<int>(a.family.label) -
                               static_cast<int>(FamilyLabel::RP2_H)] += 1;
                     }
                     check.expect(tally[0] == 1 && tally[1] == binomial(k, 3) &&
                                      tally[2] == binomial(k, 4) &&
                                      tally[3] == binomial(k, 7) &&
                                      tally[4] == binomial(k, 8),
                                  [&] { return "family tally off at k = " + std::to_string(k); });
                     if (k >= 1)
                         for (const auto& a : all)
                             for (const auto& g : std_generators(k))
                                 check.expect(members.count(reflect_mod(a.cls, g).coeffs) == 1,
                                              "set not closed under a generator");
                 }
                 return check.result();
             });

    run.fact("suite-sphere-reps-wellformed",
             "For (k, n) in {(3,2), (3,5), (4,4), (5,3)} every orbit representative has square "
             "-n and c1 = 2-n, is the lex-minimal element of its orbit, and representatives "
             "are pairwise inequivalent.",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 const std::vector<std::pair<int, int>> queries = {{3, 2}, {3, 5}, {4, 4}, {5, 3}};
                 for (const auto& [k, n] : queries) {
                     const auto reps = enumerate_negative_sphere_reps(k, n);
                     check.expect(!reps.empty(), "no representatives");
                     for (const auto& rep : reps) {
                         check.expect(square(rep) == -n && c1(rep) == 2 - n, "wrong invariants");
                         check.expect(canonicalize(rep).representative == rep,
                                      "representative not canonical");
                     }
                     for (std::size_t i = 0; i < reps.size(); ++i)
                         for (std::size_t j = i + 1; j < reps.size(); ++j)
                             check.expect(!same_orbit(reps[i], reps[j]),
                                          "representatives share an orbit");
                 }
                 return check.result();
             });

    run.fact("suite-cache-roundtrip",
             "The enumeration cache stores and reloads class lists exactly, rejects a "
             "corrupted entry, and the cached wrapper still returns the exact answer.",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 const auto dir = std::filesystem::temp_directory_path() /
                                  ("pinwheel-replicate-" + std::to_string(::getpid()));
                 std::filesystem::remove_all(dir);
                 const EnumerationCache cache(dir);
                 const EnumQuery query{x3, -1, 1};
                 const auto direct = enumerate_by_invariants(query);
                 check.expect(!cache.load(query).has_value(), "cold cache not empty");
                 cache.store(query, direct);
                 const auto reloaded = cache.load(query);
                 check.expect(reloaded.has_value() && *reloaded == direct,
                              "reload differs from stored list");
                 for (const auto& entry : std::filesystem::directory_iterator(dir)) {
                     std::ofstream clobber(entry.path(), std::ios::trunc);
                     clobber << "not json";
                 }
                 check.expect(!cache.load(query).has_value(), "corrupted entry accepted");
                 check.expect(enumerate_by_invariants_cached(query, cache) == direct,
                              "cached wrapper diverges");
                 std::filesystem::remove_all(dir);
                 return check.result();
             });

    run.fact("suite-x3-cone-explicit",
             "10000 random period vectors in [-2,6]^4: symplectic cone membership on std_X3 "
             "agrees with the explicit list h > 0, mu_i > 0, h - mu_i - mu_j > 0, and the "
             "verdict reports every violated area constraint.",
             "10000/10000", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 10000; ++iter) {
                     const Rational h = rng.uniform_rational(-2, 6, 40);
                     std::vector<Rational> mu(3);
                     for (auto& m : mu)
                         m = rng.uniform_rational(-2, 6, 40);
                     const auto verdict = symplectic_cone_contains(periods_std(3, h, mu));
                     bool explicit_inside = h > 0;
                     int failed_areas = 0;
                     for (int i = 0; i < 3; ++i) {
                         if (!(mu[i] > 0))
                             ++failed_areas;
                         explicit_inside = explicit_inside && mu[i] > 0;
                     }
                     for (int i = 0; i < 3; ++i)
                         for (int j = i + 1; j < 3; ++j) {
                             if (!(h - mu[i] - mu[j] > 0))
                                 ++failed_areas;
                             explicit_inside = explicit_inside && h - mu[i] - mu[j] > 0;
                         }
                     if (verdict.inside != explicit_inside)
                         continue;
                     if (!verdict.inside) {
                         int reported_areas = 0;
                         for (const auto& v : verdict.violated)
                             if (v.cls.has_value())
                                 ++reported_areas;
                         if (reported_areas != failed_areas)
                             continue;
                     }
                     ++good;
                 }
                 return std::to_string(good) + "/10000";
             });

    run.fact("suite-kahler-exceptional",
             "The chart translation std_X5 -> X5_special preserves the pairing and c1 on all "
             "basis pairs, and 200 constructed Kahler points give positive area to all 16 "
             "translated exceptional classes.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 std::vector<HomologyClass> basis;
                 for (int i = 0; i < 6; ++i) {
                     std::vector<Coeff> v(6, 0);
                     v[i] = 1;
                     basis.push_back(xk(5, v));
                 }
                 for (const auto& a : basis) {
                     check.expect(c1(std_x5_to_special(a)) == c1(a), "c1 not preserved");
                     for (const auto& b : basis)
                         check.expect(pairing(std_x5_to_special(a), std_x5_to_special(b)) ==
                                          pairing(a, b),
                                      "pairing not preserved");
                 }
                 std::vector<HomologyClass> translated;
                 for (const auto& cls : enumerate_exceptional(5))
                     translated.push_back(std_x5_to_special(cls));
                 check.expect(translated.size() == 16, "exceptional count off");
                 for (int iter = 0; iter < 200; ++iter) {
                     const Rational beta = rat(rng.uniform_int(1, 80), 20);
                     const Rational alpha =
                         4 * beta * (1 + rat(rng.uniform_int(1, 40), 40));
                     const Rational mu0 = beta * rat(rng.uniform_int(1, 39), 40);
                     const Rational t1 = rng.uniform_int(1, 30);
                     const Rational t2 = rng.uniform_int(1, 30);
                     const Rational t3 = rng.uniform_int(1, 30);
                     const Rational total = t1 + t2 + t3 + 1;
                     const std::vector<Rational> mu_tilde = {mu0, mu0 * t1 / total,
                                                             mu0 * t2 / total, mu0 * t3 / total};
                     check.expect(bool(kahler_cone_x5_special(alpha, beta, mu_tilde)),
                                  "constructed point not in the Kahler cone");
                     const auto periods = periods_x5_special(alpha, beta, mu_tilde);
                     for (const auto& cls : translated)
                         check.expect(periods.evaluate(cls) > 0, [&] {
                             return "non-positive area on " + to_string(cls);
                         });
                 }
                 return check.result();
             });

    run.fact("suite-monotone-family",
             "(3; 1,...,1) is monotone and in the symplectic cone for every k = 0..8, and "
             "(2, 2) is monotone on S2xS2.",
             "ok", [&](Rng&) {
                 SuiteCheck check;
                 for (int k = 0; k <= 8; ++k) {
                     const auto p = periods_std(k, 3, std::vector<Rational>(k, 1));
                     check.expect(is_monotone(p), "not monotone");
                     check.expect(bool(symplectic_cone_contains(p)), "not in the cone");
                 }
                 check.expect(is_monotone(periods_s2xs2(2, 2)), "balanced point not monotone");
                 check.expect(!is_monotone(periods_s2xs2(2, 3)), "unbalanced point monotone");
                 return check.result();
             });

    run.fact("suite-disjoin-agreement",
             "10000 sampled two-plane points: the period criterion mu1+mu2+mu3 < h, the "
             "disjoinability predicate, and witness-search feasibility all agree.",
             "10000/10000", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 10000; ++iter) {
                     const auto [h, mu] = sample_two_plane_point(rng);
                     const bool formula = mu[0] + mu[1] + mu[2] < h;
                     const bool predicate = rp2_disjoinable(h, mu);
                     const auto report = two_rp2_witness(h, mu);
                     if (formula == predicate && predicate == report.feasible &&
                         report.witness.has_value() == report.feasible &&
                         report.obstruction.has_value() == !report.feasible)
                         ++good;
                 }
                 return std::to_string(good) + "/10000";
             });

    run.fact("suite-disjoin-witness-valid",
             "1000 feasible two-plane points: the witness satisfies all six Kahler "
             "inequalities, has alpha = 2h and beta = h/2 - eps1, blows back down to the "
             "input mu exactly, and its volume equals h^2 - sum(mu^2) - 4(eps1^2 + eps2^2).",
             "1000/1000", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 1000; ++iter) {
                     X3Sample s = sample_two_plane_point(rng);
                     while (!(s.mu[0] + s.mu[1] + s.mu[2] < s.h))
                         s = sample_two_plane_point(rng);
                     const auto report = two_rp2_witness(s.h, s.mu);
                     if (!report.feasible || !report.witness)
                         continue;
                     const auto& w = *report.witness;
                     const Rational alpha = x5_alpha(w.periods);
                     const Rational beta = x5_beta(w.periods);
                     const auto mu_tilde = x5_mu_tilde(w.periods);
                     if (w.eps.size() != 2 || !(w.eps[0] > 0) || !(w.eps[1] > 0))
                         continue;
                     if (alpha != 2 * s.h || beta != s.h / 2 - w.eps[0])
                         continue;
                     if (!kahler_cone_x5_special(alpha, beta, mu_tilde).inside)
                         continue;
                     const auto [mu_back, eps_back] = transport_rp2_blowdown(mu_tilde);
                     if (mu_back != s.mu || eps_back != w.eps[1])
                         continue;
                     Rational vol = 2 * alpha * beta - 4 * beta * beta;
                     for (const auto& m : mu_tilde)
                         vol -= m * m;
                     Rational want = s.h * s.h - 4 * w.eps[0] * w.eps[0] -
                                     4 * w.eps[1] * w.eps[1];
                     for (const auto& m : s.mu)
                         want -= m * m;
                     if (vol == want)
                         ++good;
                 }
                 return std::to_string(good) + "/1000";
             });

    run.fact("suite-lens-agreement",
             "1000 random (a, b) in (0,4]^2: existence of an L(3,1) pinwheel in A+B agrees "
             "with witness-search feasibility; witnesses land in the X3 symplectic cone via "
             "the period solve, and obstructions name the violated side.",
             "1000/1000", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 1000; ++iter) {
                     const Rational a = rat(rng.uniform_int(1, 160), 40);
                     const Rational b = rat(rng.uniform_int(1, 160), 40);
                     const bool exists = l31_exists(a, b);
                     const auto report = l31_witness(a, b);
                     if (exists != report.feasible)
                         continue;
                     if (report.feasible) {
                         const auto& w = *report.witness;
                         if (w.eps.size() != 2 || w.eps[0] != w.eps[1] || !(w.eps[0] > 0))
                             continue;
                         if (!symplectic_cone_contains(w.periods).inside)
                             continue;
                         const auto resolved = l31_solve(a, b, w.eps[0], w.eps[1]);
                         if (resolved.values != w.periods.values)
                             continue;
                         ++good;
                     } else {
                         const bool a_side = 2 * b <= a;
                         const bool b_side = 2 * a <= b;
                         if (!report.obstruction)
                             continue;
                         const bool says_mu3 = report.obstruction->rfind("mu3 side", 0) == 0;
                         const bool says_mu2 = report.obstruction->rfind("mu2 side", 0) == 0;
                         if (a_side == says_mu3 && b_side == says_mu2 && a_side != b_side)
                             ++good;
                     }
                 }
                 return std::to_string(good) + "/1000";
             });

    run.fact("suite-complement-intertwines",
             "The complement identification preserves all nine generator pairings and, for "
             "100 random (mu, eps) transports, matches areas on random classes of the domain "
             "sublattice.",
             "ok", [&](Rng& rng) {
                 SuiteCheck check;
                 const std::vector<HomologyClass> gens = {
                     xk(3, {0, 2, 0, 0}), xk(3, {0, 1, -1, 0}), xk(3, {0, 0, 1, -1})};
                 for (const auto& a : gens)
                     for (const auto& b : gens)
                         check.expect(pairing(rp2_complement_map(a), rp2_complement_map(b)) ==
                                          pairing(a, b),
                                      "generator pairing not preserved");
                 for (int iter = 0; iter < 100; ++iter) {
                     const auto [h, mu] = sample_two_plane_point(rng);
                     Rational slack = mu[0] + mu[1] + mu[2] - 2 * mu[0];
                     for (int k = 1; k < 3; ++k)
                         slack = std::min(slack, Rational(mu[0] + mu[1] + mu[2] - 2 * mu[k]));
                     const Rational eps = slack * rat(rng.uniform_int(1, 99), 200);
                     const auto w = transport_rp2_blowup(h, mu, eps);
                     const auto source = periods_std(3, h, mu);
                     const Coeff x = rng.uniform_int(-3, 3);
                     const Coeff y = rng.uniform_int(-3, 3);
                     const Coeff z = rng.uniform_int(-3, 3);
                     const auto cls = xk(3, {0, 2 * x + y, z - y, -z});
                     check.expect(w.periods.evaluate(rp2_complement_map(cls)) ==
                                      source.evaluate(cls),
                                  "area not matched");
                 }
                 return check.result();
             });

    run.fact("suite-transport-roundtrip",
             "100 random valid (mu, eps): blowing up and then down returns (mu, eps) exactly.",
             "100/100", [&](Rng& rng) {
                 int good = 0;
                 for (int iter = 0; iter < 100; ++iter) {
                     const auto [h, mu] = sample_two_plane_point(rng);
                     Rational slack = mu[0] + mu[1] + mu[2] - 2 * mu[0];
                     for (int k = 1; k < 3; ++k)
                         slack = std::min(slack, Rational(mu[0] + mu[1] + mu[2] - 2 * mu[k]));
                     const Rational eps = slack * rat(rng.uniform_int(1, 99), 200);
                     const auto w = transport_rp2_blowup(h, mu, eps);
                     const std::vector<Rational> mu_tilde(w.periods.values.begin() + 1,
                                                          w.periods.values.end());
                     const auto [mu_back, eps_back] = transport_rp2_blowdown(mu_tilde);
                     if (mu_back == mu && eps_back == eps)
                         ++good;
                 }
                 return std::to_string(good) + "/100";
             });

    return run.take();
}

std::string render_report(const ReportDocument& doc) {
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& f : doc.facts)
        facts.push_back({{"id", f.id},
                         {"claim", f.claim},
                         {"expected", f.expected},
                         {"computed", f.computed},
                         {"pass", f.pass}});
    const nlohmann::json out = {{"schema", doc.schema},
                                {"tool_version", doc.tool_version},
                                {"seed", doc.seed},
                                {"facts", std::move(facts)},
                                {"passed", doc.passed},
                                {"failed", doc.failed}};
    return out.dump(2) + "\n";
}

} // namespace pinwheel
