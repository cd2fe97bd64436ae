#include "pinwheel/chart.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/reflections.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pinwheel;

namespace {

HomologyClass x3(std::vector<Coeff> v) { return make_class(std_xk_chart(3), std::move(v)); }

} // namespace

TEST_CASE("reflections demand a square -2 axis") {
    CHECK_THROWS_AS(Reflection(x3({1, 0, 0, 0})), InvalidReflection);   // square 1
    CHECK_THROWS_AS(Reflection(x3({0, 1, 0, 0})), InvalidReflection);   // square -1
    CHECK_THROWS_AS(Reflection(x3({1, -1, 0, 0})), InvalidReflection);  // square 0
    CHECK_NOTHROW(Reflection(x3({0, 1, -1, 0})));
    CHECK_NOTHROW(Reflection(x3({1, -1, -1, -1})));
}

TEST_CASE("reflection acts as x + (x.S)S") {
    const Reflection cremona(x3({1, -1, -1, -1}));
    const auto H = x3({1, 0, 0, 0});
    const auto image = reflect(H, cremona);
    CHECK(image == x3({2, -1, -1, -1}));
    CHECK(reflect(image, cremona) == H); // involution
    CHECK(square(image) == square(H));
    CHECK(c1(image) == c1(H));

    const Reflection swap12(x3({0, 1, -1, 0}));
    CHECK(reflect(x3({0, 1, 0, 0}), swap12) == x3({0, 0, 1, 0}));
    CHECK(reflect(x3({0, 0, 0, 1}), swap12) == x3({0, 0, 0, 1}));

    CHECK_THROWS_AS(reflect(make_class(s2xs2_chart(), {1, 0}), cremona), ChartMismatch);
}

TEST_CASE("reflect_mod reduces the integral action") {
    const Reflection cremona(x3({1, -1, -1, -1}));
    const auto H = x3({1, 0, 0, 0});
    // Cremona sends H to 2H-E1-E2-E3, which is E1+E2+E3 mod 2.
    CHECK(reflect_mod(reduce_mod(H, 2), cremona).coeffs == std::vector<Coeff>{0, 1, 1, 1});
    for (long long n : {2LL, 3LL}) {
        const auto a = x3({2, -1, 3, 1});
        CHECK(reflect_mod(reduce_mod(a, n), cremona) == reduce_mod(reflect(a, cremona), n));
    }
}

TEST_CASE("standard generator sets") {
    CHECK(std_generators(1).empty()); // no square -2 classes on X1
    CHECK(std_generators(2).size() == 1);
    CHECK(std_generators(3).size() == 4);   // 3 swaps + 1 Cremona
    CHECK(std_generators(5).size() == 20);  // C(5,2) + C(5,3)
    CHECK(std_generators(8).size() == 84);  // C(8,2) + C(8,3)
    for (const auto& g : std_generators(4)) {
        CHECK(square(g.axis()) == -2);
        CHECK(c1(g.axis()) == 0);
    }
}

TEST_CASE("canonicalize picks the lexicographic orbit minimum with a replayable word") {
    const auto form = canonicalize(x3({0, 0, 1, 0})); // E2
    CHECK(form.representative == x3({0, 0, 0, 1}));   // E3 is lex-smaller in the orbit
    CHECK(form.certificate.source == x3({0, 0, 1, 0}));
    CHECK(form.certificate.target == form.representative);
    CHECK(form.certificate.verify());
    CHECK(apply_word(form.certificate.word, form.certificate.source) == form.representative);

    // already-minimal input: empty word
    const auto fixed = canonicalize(x3({0, 0, 0, 1}));
    CHECK(fixed.representative == x3({0, 0, 0, 1}));
    CHECK(fixed.certificate.word.empty());

    CHECK(canonicalize(x3({1, -1, -1, -1})).representative == x3({-1, 1, 1, 1}));
    CHECK(canonicalize(x3({0, 1, -1, 0})).representative == x3({0, -1, 0, 1}));

    CHECK_THROWS_AS(canonicalize(make_class(s2xs2_chart(), {1, 0})), UnsupportedChart);
    CHECK_THROWS_AS(canonicalize(make_class(x5_special_chart(), {0, 0, 1, 0, 0, 0})),
                    UnsupportedChart);
}

TEST_CASE("full orbit of E1 on X3 is the exceptional system") {
    const auto orbit = full_orbit(x3({0, 1, 0, 0}));
    REQUIRE(orbit.size() == 6);
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    const std::set<std::vector<Coeff>> expect{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0},
                                              {1, -1, -1, 0}, {1, -1, 0, -1}, {1, 0, -1, -1}};
    std::set<std::vector<Coeff>> got;
    for (const auto& cls : orbit)
        got.insert(cls.coeffs);
    CHECK(got == expect);
}

TEST_CASE("orbit membership and certificates") {
    const auto a = x3({0, 1, 0, 0});
    const auto b = x3({1, -1, -1, 0});
    CHECK(same_orbit(a, b));
    const auto cert = same_orbit_certificate(a, b);
    REQUIRE(cert.has_value());
    CHECK(cert->source == a);
    CHECK(cert->target == b);
    CHECK(cert->verify());

    // different square means different orbit, and no certificate
    CHECK(!same_orbit(a, x3({1, 0, 0, 0})));
    CHECK(!same_orbit_certificate(a, x3({1, 0, 0, 0})).has_value());
    CHECK_THROWS_AS(same_orbit(a, make_class(std_xk_chart(4), {0, 1, 0, 0, 0})), ChartMismatch);
}

TEST_CASE("a forged certificate fails verify") {
    auto cert = *same_orbit_certificate(x3({0, 1, 0, 0}), x3({0, 0, 1, 0}));
    cert.target = x3({0, 0, 0, 1});
    CHECK(!cert.verify());
}

TEST_CASE("mod-2 and mod-3 canonical forms") {
    const auto h2 = reduce_mod(x3({1, 0, 0, 0}), 2);
    const auto sum2 = reduce_mod(x3({0, 1, 1, 1}), 2);
    // Cremona joins H and E1+E2+E3 mod 2; the minimum is the all-E vector.
    CHECK(canonicalize_mod(h2) == canonicalize_mod(sum2));
    CHECK(canonicalize_mod(h2).coeffs == std::vector<Coeff>{0, 1, 1, 1});

    // the conic 2H-E1-E2-E3 is a Cremona image of H, so they agree mod 3 too
    const auto conic3 = reduce_mod(x3({2, -1, -1, -1}), 3);
    CHECK(canonicalize_mod(conic3) == canonicalize_mod(reduce_mod(x3({1, 0, 0, 0}), 3)));

    CHECK_THROWS_AS(canonicalize_mod(reduce_mod(x3({1, 0, 0, 0}), 5)), UnsupportedModulus);
    CHECK_THROWS_AS(canonicalize_mod(reduce_mod(make_class(s2xs2_chart(), {1, 1}), 2)),
                    UnsupportedChart);
}
