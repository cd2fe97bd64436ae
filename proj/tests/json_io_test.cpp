#include "pinwheel/cones.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/json_io.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/pinwheel_calculus.hpp"
#include "pinwheel/reflections.hpp"

#include <doctest.h>

using namespace pinwheel;
using nlohmann::json;

TEST_CASE("classes round-trip bit-exactly through JSON") {
    const auto cls = make_class(std_xk_chart(3), {2, -1, -1, -1});
    const json j = cls;
    CHECK(j.at("chart") == "std_X3");
    CHECK(j.at("coeffs") == json::array({2, -1, -1, -1}));
    CHECK(j.get<HomologyClass>() == cls);
    // serialize(parse(serialize(x))) is byte-stable
    CHECK(json::parse(j.dump()).dump() == j.dump());

    const auto mod = reduce_mod(cls, 2);
    const json jm = mod;
    CHECK(jm.at("modulus") == 2);
    CHECK(jm.get<ModClass>() == mod);

    CHECK_THROWS_AS((json{{"chart", "std_X99"}, {"coeffs", {1}}}).get<HomologyClass>(),
                    UnsupportedChart);
    CHECK_THROWS_AS((json{{"chart", "std_X3"}, {"coeffs", {1}}}).get<HomologyClass>(),
                    DegenerateInput);
}

TEST_CASE("periods serialize as exact rational strings") {
    const auto p = periods_std(3, rat(7, 2), {rat(1), rat(2, 3), rat(1)});
    const json j = p;
    CHECK(j.at("values") == json::array({"7/2", "1", "2/3", "1"}));
    const auto back = j.get<PeriodVector>();
    CHECK(same_chart(back.chart, p.chart));
    CHECK(back.values == p.values);
    CHECK_THROWS_AS((json{{"chart", "std_X3"}, {"values", {"1", "1/0", "1", "1"}}})
                        .get<PeriodVector>(),
                    ParseError);
}

TEST_CASE("verdicts expose violations with exact offending values") {
    const json inside = symplectic_cone_contains(periods_std(3, 3, {rat(1), rat(1), rat(1)}));
    CHECK(inside.at("inside") == true);
    CHECK(inside.at("violated").empty());

    const json wall = symplectic_cone_contains(periods_std(3, 2, {rat(1), rat(1), rat(1)}));
    CHECK(wall.at("inside") == false);
    REQUIRE(wall.at("violated").size() == 3);
    CHECK(wall.at("violated")[0].at("constraint") == "area(H-E1-E2) > 0");
    CHECK(wall.at("violated")[0].at("value") == "0");
}

TEST_CASE("canonical forms ship their replayable word") {
    const json j = canonicalize(make_class(std_xk_chart(3), {0, 0, 1, 0}));
    CHECK(j.at("representative").at("coeffs") == json::array({0, 0, 0, 1}));
    CHECK(j.at("certificate").at("source").at("coeffs") == json::array({0, 0, 1, 0}));
    CHECK(j.at("certificate").at("word").is_array());
    CHECK(!j.at("certificate").at("word").empty());
}

TEST_CASE("feasibility reports carry witness xor obstruction") {
    const json yes = two_rp2_witness(rat(4), {rat(1), rat(1), rat(1)});
    CHECK(yes.at("feasible") == true);
    CHECK(yes.contains("witness"));
    CHECK(!yes.contains("obstruction"));
    CHECK(yes.at("witness").at("target_chart") == "X5_special");
    CHECK(yes.at("witness").at("eps") == json::array({"3/16", "1/16"}));

    const json no = two_rp2_witness(rat(3), {rat(1), rat(1), rat(1)});
    CHECK(no.at("feasible") == false);
    CHECK(!no.contains("witness"));
    CHECK(no.contains("obstruction"));
}

TEST_CASE("rigidity answers name their derivation mode") {
    CHECK(json(del_pezzo_rp2_pair_must_intersect(3)).at("mode") == "computed");
    CHECK(json(del_pezzo_rp2_pair_must_intersect(5)).at("mode") == "recorded");
}

TEST_CASE("audin entries pair the residue class with its family tag") {
    const auto all = audin_admissible(3);
    const json j = all[1];
    CHECK(j.at("class").at("modulus") == 2);
    CHECK(j.at("family") == "RP2_3E(1,2,3)");
}

TEST_CASE("error objects have the stable two-field shape") {
    const auto obj = error_object("parse_error", "bad digit");
    CHECK(obj.at("error").at("kind") == "parse_error");
    CHECK(obj.at("error").at("message") == "bad digit");
    CHECK(obj.size() == 1);
}
