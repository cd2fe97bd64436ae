#include "pinwheel/chart.hpp"
#include "pinwheel/cones.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/pinwheel_calculus.hpp"

#include <doctest.h>

using namespace pinwheel;

namespace {

std::vector<Rational> mu3(long long a, long long b, long long c) {
    return {rat(a), rat(b), rat(c)};
}

} // namespace

TEST_CASE("plane existence in E1+E2+E3 is the strict triangle inequality") {
    CHECK(rp2_exists_sum(rat(3), mu3(1, 1, 1)));
    CHECK(rp2_exists_sum(rat(6), {rat(2), rat(2), rat(3)}));
    CHECK(!rp2_exists_sum(rat(5), {rat(1), rat(1), rat(2)}));      // degenerate triangle
    CHECK(!rp2_exists_sum(rat(5), {rat(1), rat(1), rat(5, 2)}));   // fat side
    CHECK_THROWS_AS(rp2_exists_sum(rat(1), mu3(1, 1, 1)), NotInSymplecticCone);
    CHECK_THROWS_AS(rp2_exists_sum(rat(3), {rat(1), rat(1)}), DegenerateInput);
}

TEST_CASE("plane existence in H needs every period under h/2") {
    CHECK(rp2_exists_H(rat(3), mu3(1, 1, 1)));
    CHECK(!rp2_exists_H(rat(3), {rat(1), rat(1), rat(3, 2)}));
    CHECK(rp2_exists_H(rat(3), {rat(1), rat(1), rat(149, 100)}));
    CHECK_THROWS_AS(rp2_exists_H(rat(1), mu3(1, 1, 1)), NotInSymplecticCone);
}

TEST_CASE("disjoinability is the strict volume-style sum bound") {
    CHECK(rp2_disjoinable(rat(4), mu3(1, 1, 1)));
    CHECK(!rp2_disjoinable(rat(3), mu3(1, 1, 1)));
    CHECK(rp2_disjoinable(rat(301, 100), mu3(1, 1, 1)));

    // absent planes are reported by name, not folded into false; the H
    // plane is checked first
    try {
        rp2_disjoinable(rat(5), {rat(1), rat(1), rat(2)});
        FAIL("expected LagrangianAbsent");
    } catch (const LagrangianAbsent& e) {
        CHECK(e.missing_class() == "E1+E2+E3");
    }
    try {
        rp2_disjoinable(rat(3), {rat(1), rat(5, 4), rat(3, 2)});
        FAIL("expected LagrangianAbsent");
    } catch (const LagrangianAbsent& e) {
        CHECK(e.missing_class() == "H");
    }
}

TEST_CASE("two_rp2_witness produces a checked Kahler point") {
    const auto report = two_rp2_witness(rat(4), mu3(1, 1, 1));
    REQUIRE(report.feasible);
    REQUIRE(report.witness.has_value());
    CHECK(!report.obstruction.has_value());
    const auto& w = *report.witness;
    CHECK(same_chart(w.target_chart, x5_special_chart()));
    REQUIRE(w.eps.size() == 2);
    // seed eps1 = 3/8 hits beta - mu0 = 0 exactly, so one halving happens
    CHECK(w.eps[0] == rat(3, 16));
    CHECK(w.eps[1] == rat(1, 16));
    CHECK(x5_alpha(w.periods) == rat(8));
    CHECK(x5_beta(w.periods) == rat(29, 16));
    CHECK(x5_mu_tilde(w.periods) ==
          std::vector<Rational>{rat(25, 16), rat(7, 16), rat(7, 16), rat(7, 16)});
    CHECK(kahler_cone_x5_special(w.periods).inside);

    const auto blocked = two_rp2_witness(rat(3), mu3(1, 1, 1));
    CHECK(!blocked.feasible);
    CHECK(!blocked.witness.has_value());
    REQUIRE(blocked.obstruction.has_value());
    CHECK(blocked.obstruction->rfind("beta window empty", 0) == 0);

    CHECK_THROWS_AS(two_rp2_witness(rat(1), mu3(1, 1, 1)), NotInSymplecticCone);
    CHECK_THROWS_AS(two_rp2_witness(rat(4), {rat(1), rat(1), rat(2)}), LagrangianAbsent);
}

TEST_CASE("single blow-up transport and its inverse") {
    const auto w = transport_rp2_blowup(rat(4), mu3(1, 1, 1), rat(1, 4));
    CHECK(same_chart(w.target_chart, std_xk_chart(4)));
    CHECK(w.eps == std::vector<Rational>{rat(1, 4)});
    CHECK(w.periods.values ==
          std::vector<Rational>{rat(4), rat(7, 4), rat(1, 4), rat(1, 4), rat(1, 4)});

    const auto [mu, eps] = transport_rp2_blowdown({rat(7, 4), rat(1, 4), rat(1, 4), rat(1, 4)});
    CHECK(mu == mu3(1, 1, 1));
    CHECK(eps == rat(1, 4));

    // the (-4)-sphere E~0-E~1-E~2-E~3 gets area 4*eps
    const auto sphere = make_class(std_xk_chart(4), {0, 1, -1, -1, -1});
    CHECK(w.periods.evaluate(sphere) == rat(1));

    CHECK_THROWS_AS(transport_rp2_blowup(rat(4), mu3(1, 1, 1), rat(1, 2)), EpsilonOutOfRange);
    CHECK_THROWS_AS(transport_rp2_blowup(rat(4), mu3(1, 1, 1), rat(0)), EpsilonOutOfRange);
    CHECK_THROWS_AS(transport_rp2_blowup(rat(4), mu3(1, 1, 1), rat(-1, 8)), EpsilonOutOfRange);
    CHECK_THROWS_AS(transport_rp2_blowup(rat(9), {rat(1), rat(1), rat(2)}, rat(1, 8)),
                    TriangleViolated);
    CHECK_THROWS_AS(transport_rp2_blowdown({rat(1), rat(1), rat(1), rat(1)}), DegenerateInput);
    CHECK_THROWS_AS(transport_rp2_blowdown({rat(1), rat(1), rat(1)}), DegenerateInput);
    CHECK_THROWS_AS(transport_rp2_blowdown({rat(7, 4), rat(-1, 4), rat(1, 4), rat(1, 4)}),
                    DegenerateInput);
}

TEST_CASE("complement identification is an isometry with frozen images") {
    const auto x3c = std_xk_chart(3);
    const auto x4c = std_xk_chart(4);
    const auto img = [&](std::vector<Coeff> v) {
        return rp2_complement_map(make_class(x3c, std::move(v)));
    };
    CHECK(img({0, 2, 0, 0}) == make_class(x4c, {0, 1, -1, 1, 1}));
    CHECK(img({0, 0, 2, 0}) == make_class(x4c, {0, 1, 1, -1, 1}));
    CHECK(img({0, 0, 0, 2}) == make_class(x4c, {0, 1, 1, 1, -1}));
    CHECK(img({0, 1, -1, 0}) == make_class(x4c, {0, 0, -1, 1, 0}));
    CHECK(img({0, 0, 1, -1}) == make_class(x4c, {0, 0, 0, -1, 1}));

    // linearity + pairing preservation on the spanning set
    const std::vector<HomologyClass> span{make_class(x3c, {0, 1, -1, 0}),
                                          make_class(x3c, {0, 0, 1, -1}),
                                          make_class(x3c, {0, 2, 0, 0})};
    for (const auto& a : span)
        for (const auto& b : span)
            CHECK(pairing(rp2_complement_map(a), rp2_complement_map(b)) == pairing(a, b));

    // areas intertwine along the blow-up transport
    const auto src = periods_std(3, 4, mu3(1, 1, 1));
    const auto dst = transport_rp2_blowup(rat(4), mu3(1, 1, 1), rat(1, 8)).periods;
    for (const auto& a : span)
        CHECK(dst.evaluate(rp2_complement_map(a)) == src.evaluate(a));

    CHECK_THROWS_AS(img({1, 0, 0, 0}), OutsideDomainSpan);
    CHECK_THROWS_AS(img({0, 1, 0, 0}), OutsideDomainSpan);
    CHECK_THROWS_AS(rp2_complement_map(make_class(x4c, {0, 1, 0, 0, 0})), ChartMismatch);
}

TEST_CASE("l31_solve transports lens periods into X3") {
    const auto p = l31_solve(rat(1), rat(1), rat(1, 100), rat(1, 100));
    CHECK(same_chart(p.chart, std_xk_chart(3)));
    CHECK(p.values == std::vector<Rational>{rat(2), rat(409, 300), rat(41, 150), rat(41, 150)});
    CHECK_THROWS_AS(l31_solve(rat(0), rat(1), rat(1, 100), rat(1, 100)), NonPositiveInput);
    CHECK_THROWS_AS(l31_solve(rat(1), rat(1), rat(1, 100), rat(-1, 100)), NonPositiveInput);
}

TEST_CASE("lens existence window is b/2 < a < 2b") {
    CHECK(l31_exists(rat(1), rat(1)));
    CHECK(!l31_exists(rat(1), rat(2)));  // lambda = 1/2, boundary
    CHECK(!l31_exists(rat(2), rat(1)));  // lambda = 2, boundary
    CHECK(l31_exists(rat(3), rat(2)));
    CHECK(l31_exists(rat(199, 100), rat(1)));
    CHECK(!l31_exists(rat(201, 100), rat(1)));
    CHECK_THROWS_AS(l31_exists(rat(0), rat(1)), NonPositiveInput);
    CHECK_THROWS_AS(l31_exists(rat(1), rat(-1)), NonPositiveInput);
}

TEST_CASE("l31_witness mirrors the window with periods or a named side") {
    const auto good = l31_witness(rat(1), rat(1));
    REQUIRE(good.feasible);
    REQUIRE(good.witness.has_value());
    REQUIRE(good.witness->eps.size() == 2);
    CHECK(good.witness->eps[0] == good.witness->eps[1]);
    CHECK(good.witness->eps[0] == rat(1, 100)); // first probe already lands inside
    const auto probe = l31_solve(rat(1), rat(1), rat(1, 100), rat(1, 100));
    CHECK(good.witness->periods.values == probe.values);
    CHECK(symplectic_cone_contains(good.witness->periods).inside);

    const auto a_heavy = l31_witness(rat(4), rat(1));
    CHECK(!a_heavy.feasible);
    REQUIRE(a_heavy.obstruction.has_value());
    CHECK(a_heavy.obstruction->rfind("mu3 side", 0) == 0);

    const auto b_heavy = l31_witness(rat(1), rat(4));
    CHECK(!b_heavy.feasible);
    REQUIRE(b_heavy.obstruction.has_value());
    CHECK(b_heavy.obstruction->rfind("mu2 side", 0) == 0);

    CHECK_THROWS_AS(l31_witness(rat(0), rat(1)), NonPositiveInput);
}

TEST_CASE("blow-up targets track b2 across pinwheel surgeries") {
    using PT = PinwheelType;
    CHECK(blowup_target(std_xk_chart(3), {PT::L21})->name() == "std_X4");
    CHECK(blowup_target(std_xk_chart(3), {PT::L31})->name() == "std_X5");
    CHECK(blowup_target(std_xk_chart(3), {PT::L21, PT::L21})->name() == "std_X5");
    CHECK(blowup_target(std_xk_chart(0), {PT::L21})->name() == "S2xS2");
    CHECK(blowup_target(std_xk_chart(0), {PT::L31})->name() == "std_X2");
    CHECK(blowup_target(s2xs2_chart(), {PT::L31})->name() == "std_X3");
    CHECK(blowup_target(s2xs2_chart(), {PT::L31, PT::L31})->name() == "std_X5");
    CHECK(blowup_target(std_xk_chart(6), {})->name() == "std_X6");
    CHECK(blowup_target(s2xs2_chart(), {})->name() == "S2xS2");
    CHECK_THROWS_AS(blowup_target(std_xk_chart(8), {PT::L21}), UnsupportedInput);
    CHECK_THROWS_AS(blowup_target(std_xk_chart(7), {PT::L31}), UnsupportedInput);
    CHECK_THROWS_AS(blowup_target(x5_special_chart(), {PT::L21}), UnsupportedInput);
}

TEST_CASE("del Pezzo rigidity has one computed case and three recorded ones") {
    const auto k3 = del_pezzo_rp2_pair_must_intersect(3);
    CHECK(k3.must_intersect);
    CHECK(k3.mode == DerivationMode::Computed);
    for (int k : {4, 5, 6}) {
        const auto ans = del_pezzo_rp2_pair_must_intersect(k);
        CHECK(ans.must_intersect);
        CHECK(ans.mode == DerivationMode::Recorded);
    }
    for (int k : {2, 7, 8, 9})
        CHECK_THROWS_AS(del_pezzo_rp2_pair_must_intersect(k), UnsupportedInput);
}
