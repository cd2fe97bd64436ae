#include "pinwheel/cones.hpp"
#include "pinwheel/enumeration.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/json_io.hpp"
#include "pinwheel/lattice.hpp"
#include "pinwheel/pinwheel_calculus.hpp"
#include "pinwheel/reflections.hpp"
#include "pinwheel/replicate.hpp"
#include "pinwheel/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace pinwheel;

// Accepts the short manifold names X0..X8 alongside the chart registry names
// (std_X0..std_X8, S2xS2, X5_special).
ChartPtr resolve_manifold(const std::string& name) {
    if (name.size() == 2 && name[0] == 'X' && std::isdigit(static_cast<unsigned char>(name[1])))
        return std_xk_chart(name[1] - '0');
    return find_chart(name);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty())
        throw ParseError("expected a comma-separated list of rationals, got \"" + text + "\"");
    return out;
}

std::vector<Coeff> parse_coeff_list(const std::string& text) {
    std::vector<Coeff> out;
    for (const auto& r : parse_rational_list(text)) {
        if (denominator(r) != 1)
            throw ParseError("expected integer coefficients, got \"" + text + "\"");
        out.push_back(static_cast<Coeff>(numerator(r)));
    }
    return out;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

nlohmann::json result_of(bool value) { return nlohmann::json{{"result", value}}; }

// Splits "h,mu1,...,muk" into the h period and the mu list.
std::pair<Rational, std::vector<Rational>> split_periods(const std::string& text) {
    auto values = parse_rational_list(text);
    const Rational h = values.front();
    values.erase(values.begin());
    return {h, values};
}

void require_x3(const ChartPtr& chart) {
    if (!same_chart(chart, std_xk_chart(3)))
        throw UnsupportedChart("this operation is defined on X3; got " + chart->name());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " - exact lattice calculus for rational symplectic 4-manifolds"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- cone ---------------------------------------------------------------
    auto* cone = app.add_subcommand("cone", "Cone membership tests");
    cone->require_subcommand(1);

    std::string cone_manifold = "X3";
    std::string cone_periods;
    auto* cone_check = cone->add_subcommand("check", "Symplectic cone membership with verdict");
    cone_check->add_option("--manifold", cone_manifold, "Manifold name (X0..X8, S2xS2)");
    cone_check->add_option("--periods", cone_periods, "Periods, e.g. 3,1,1,1")->required();
    cone_check->callback([&] {
        const ChartPtr chart = resolve_manifold(cone_manifold);
        const auto p = make_periods(chart, parse_rational_list(cone_periods));
        emit(symplectic_cone_contains(p));
    });

    std::string kx5_alpha, kx5_beta, kx5_mu;
    auto* cone_kahler = cone->add_subcommand(
        "kahler-x5", "Kahler cone of the five-fold blow-up in (alpha, beta, mu~) coordinates");
    cone_kahler->add_option("--alpha", kx5_alpha)->required();
    cone_kahler->add_option("--beta", kx5_beta)->required();
    cone_kahler->add_option("--mu", kx5_mu, "mu~0,mu~1,mu~2,mu~3")->required();
    cone_kahler->callback([&] {
        emit(kahler_cone_x5_special(parse_rational(kx5_alpha), parse_rational(kx5_beta),
                                    parse_rational_list(kx5_mu)));
    });

    std::string mono_manifold = "X3";
    std::string mono_periods;
    auto* cone_mono = cone->add_subcommand("monotone", "Monotonicity test");
    cone_mono->add_option("--manifold", mono_manifold);
    cone_mono->add_option("--periods", mono_periods)->required();
    cone_mono->callback([&] {
        const ChartPtr chart = resolve_manifold(mono_manifold);
        emit(result_of(is_monotone(make_periods(chart, parse_rational_list(mono_periods)))));
    });

    // ---- enumerate ----------------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "Class enumeration (cached)");
    enumerate->require_subcommand(1);

    bool no_cache = false;
    std::string cache_dir;
    auto add_cache_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--no-cache", no_cache, "Recompute without touching the cache");
        cmd->add_option("--cache-dir", cache_dir, "Cache directory (default: user cache path)");
    };
    auto run_query = [&](const EnumQuery& query) {
        if (no_cache)
            return enumerate_by_invariants(query);
        const EnumerationCache cache(cache_dir.empty() ? default_cache_dir()
                                                       : std::filesystem::path(cache_dir));
        return enumerate_by_invariants_cached(query, cache);
    };

    std::string enum_manifold = "X3";
    Coeff enum_square = 0;
    Coeff enum_c1 = 0;
    auto* enum_classes =
        enumerate->add_subcommand("classes", "All classes with a given square and c1");
    enum_classes->add_option("--manifold", enum_manifold);
    enum_classes->add_option("--square", enum_square)->required();
    enum_classes->add_option("--c1", enum_c1)->required();
    add_cache_flags(enum_classes);
    enum_classes->callback([&] {
        emit(run_query({resolve_manifold(enum_manifold), enum_square, enum_c1}));
    });

    int exc_k = 0;
    auto* enum_exc =
        enumerate->add_subcommand("exceptional", "Square -1, c1 = 1 classes of std_Xk");
    enum_exc->add_option("--k", exc_k)->required();
    add_cache_flags(enum_exc);
    enum_exc->callback([&] {
        if (exc_k < 0 || exc_k > 8)
            throw UnsupportedChart("exceptional enumeration needs 0 <= k <= 8, got " +
                                   std::to_string(exc_k));
        emit(run_query({std_xk_chart(exc_k), -1, 1}));
    });

    int sph_k = 0;
    Coeff sph_square = 0;
    auto* enum_sph = enumerate->add_subcommand(
        "spheres", "Orbit representatives of negative sphere classes with a given square");
    enum_sph->add_option("--k", sph_k)->required();
    enum_sph->add_option("--square", sph_square, "Self-intersection, at most -1")->required();
    enum_sph->callback([&] {
        emit(enumerate_negative_sphere_reps(sph_k, static_cast<int>(-sph_square)));
    });

    int audin_k = 0;
    auto* enum_audin = enumerate->add_subcommand(
        "audin", "Mod-2 classes whose integral lifts have square = 1 mod 4");
    enum_audin->add_option("--k", audin_k)->required();
    enum_audin->callback([&] {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : audin_admissible(audin_k))
            arr.push_back(to_string(a.cls));
        emit(arr);
    });

    int pairs_k = 3;
    auto* enum_pairs = enumerate->add_subcommand(
        "pairs", "Orbit representatives of admissible even-pairing class pairs");
    enum_pairs->add_option("--k", pairs_k)->required();
    enum_pairs->callback([&] {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [first, second] : disjoint_rp2_class_pairs(pairs_k))
            arr.push_back({{"first", first}, {"second", second}});
        emit(arr);
    });

    // ---- pinwheel -----------------------------------------------------------
    auto* pinwheel_cmd = app.add_subcommand("pinwheel", "Lagrangian existence and disjunction");
    pinwheel_cmd->require_subcommand(1);

    struct X3Args {
        std::string manifold = "X3";
        std::string periods;
    };
    auto add_x3_options = [](CLI::App* cmd, X3Args& args) {
        cmd->add_option("--manifold", args.manifold, "Must name X3");
        cmd->add_option("--periods", args.periods, "h,mu1,mu2,mu3")->required();
    };
    auto x3_input = [&](const X3Args& args) {
        require_x3(resolve_manifold(args.manifold));
        return split_periods(args.periods);
    };

    X3Args ex_sum_args;
    auto* ex_sum = pinwheel_cmd->add_subcommand(
        "exists-sum", "Lagrangian projective plane in E1+E2+E3 exists");
    add_x3_options(ex_sum, ex_sum_args);
    ex_sum->callback([&] {
        const auto [h, mu] = x3_input(ex_sum_args);
        emit(result_of(rp2_exists_sum(h, mu)));
    });

    X3Args ex_h_args;
    auto* ex_h =
        pinwheel_cmd->add_subcommand("exists-h", "Lagrangian projective plane in H exists");
    add_x3_options(ex_h, ex_h_args);
    ex_h->callback([&] {
        const auto [h, mu] = x3_input(ex_h_args);
        emit(result_of(rp2_exists_H(h, mu)));
    });

    X3Args disj_args;
    auto* disj = pinwheel_cmd->add_subcommand(
        "disjoinable", "The two planes can be made disjoint");
    add_x3_options(disj, disj_args);
    disj->callback([&] {
        const auto [h, mu] = x3_input(disj_args);
        emit(result_of(rp2_disjoinable(h, mu)));
    });

    X3Args two_args;
    auto* two = pinwheel_cmd->add_subcommand(
        "two-rp2", "Constructive disjunction witness or obstruction");
    add_x3_options(two, two_args);
    two->callback([&] {
        const auto [h, mu] = x3_input(two_args);
        emit(two_rp2_witness(h, mu));
    });

    std::string l31_lambda, l31_a, l31_b;
    auto* l31 = pinwheel_cmd->add_subcommand(
        "l31", "L(3,1) pinwheel existence in A+B on (S2xS2, omega_{a,b})");
    auto* lambda_opt = l31->add_option("--lambda", l31_lambda, "Shorthand for a = lambda, b = 1");
    auto* a_opt = l31->add_option("--a", l31_a);
    auto* b_opt = l31->add_option("--b", l31_b);
    a_opt->needs(b_opt);
    b_opt->needs(a_opt);
    lambda_opt->excludes(a_opt);
    l31->callback([&] {
        if (!l31_lambda.empty())
            emit(result_of(l31_exists(parse_rational(l31_lambda), 1)));
        else if (!l31_a.empty())
            emit(result_of(l31_exists(parse_rational(l31_a), parse_rational(l31_b))));
        else
            throw ParseError("l31 needs --lambda or --a/--b");
    });

    std::string l31w_a, l31w_b;
    auto* l31w = pinwheel_cmd->add_subcommand("l31-witness",
                                              "Constructive L(3,1) witness or obstruction");
    l31w->add_option("--a", l31w_a)->required();
    l31w->add_option("--b", l31w_b)->required();
    l31w->callback([&] { emit(l31_witness(parse_rational(l31w_a), parse_rational(l31w_b))); });

    int dp_k = 3;
    auto* dp = pinwheel_cmd->add_subcommand(
        "del-pezzo", "Must two Lagrangian projective planes in monotone Xk intersect?");
    dp->add_option("--k", dp_k)->required();
    dp->callback([&] { emit(del_pezzo_rp2_pair_must_intersect(dp_k)); });

    std::string bt_manifold = "X3";
    std::string bt_pinwheels;
    auto* bt = pinwheel_cmd->add_subcommand("blowup-target",
                                            "Diffeomorphism type after rational blow-ups");
    bt->add_option("--manifold", bt_manifold);
    bt->add_option("--pinwheels", bt_pinwheels, "Comma-separated list of L21/L31");
    bt->callback([&] {
        std::vector<PinwheelType> types;
        std::stringstream stream(bt_pinwheels);
        std::string item;
        while (std::getline(stream, item, ',')) {
            if (item == "L21")
                types.push_back(PinwheelType::L21);
            else if (item == "L31")
                types.push_back(PinwheelType::L31);
            else
                throw ParseError("unknown pinwheel type \"" + item + "\" (expected L21 or L31)");
        }
        emit(nlohmann::json{
            {"target", blowup_target(resolve_manifold(bt_manifold), types)->name()}});
    });

    // ---- canonicalize ---------------------------------------------------------
    std::string canon_manifold = "X3";
    std::string canon_coeffs;
    long long canon_mod = 0;
    auto* canon = app.add_subcommand(
        "canonicalize", "Lexicographically minimal orbit representative, with certificate");
    canon->add_option("--manifold", canon_manifold);
    canon->add_option("--coeffs", canon_coeffs, "Integer coefficients, e.g. -2,3,0,0")->required();
    canon->add_option("--mod", canon_mod, "Reduce mod n (2 or 3) and canonicalize the residue");
    canon->callback([&] {
        const auto cls =
            make_class(resolve_manifold(canon_manifold), parse_coeff_list(canon_coeffs));
        if (canon_mod != 0)
            emit(canonicalize_mod(reduce_mod(cls, canon_mod)));
        else
            emit(canonicalize(cls));
    });

    // ---- transport -------------------------------------------------------------
    auto* transport = app.add_subcommand("transport", "Period transport across blow-ups");
    transport->require_subcommand(1);

    std::string tb_periods, tb_eps;
    auto* tb = transport->add_subcommand("blowup", "X3 -> X4 period transport");
    tb->add_option("--periods", tb_periods, "h,mu1,mu2,mu3")->required();
    tb->add_option("--eps", tb_eps, "Quarter-area of the new (-4)-sphere")->required();
    tb->callback([&] {
        const auto [h, mu] = split_periods(tb_periods);
        emit(transport_rp2_blowup(h, mu, parse_rational(tb_eps)));
    });

    std::string td_mu;
    auto* td = transport->add_subcommand("blowdown", "X4 -> X3 period transport");
    td->add_option("--mu-tilde", td_mu, "mu~0,mu~1,mu~2,mu~3")->required();
    td->callback([&] {
        const auto [mu, eps] = transport_rp2_blowdown(parse_rational_list(td_mu));
        nlohmann::json mu_json = nlohmann::json::array();
        for (const auto& m : mu)
            mu_json.push_back(rational_to_string(m));
        emit(nlohmann::json{{"mu", mu_json}, {"eps", rational_to_string(eps)}});
    });

    std::string tc_coeffs;
    auto* tc = transport->add_subcommand(
        "complement", "Complement identification on the plane's perp sublattice");
    tc->add_option("--coeffs", tc_coeffs, "X3 coefficients d,m1,m2,m3")->required();
    tc->callback([&] {
        emit(rp2_complement_map(make_class(std_xk_chart(3), parse_coeff_list(tc_coeffs))));
    });

    // ---- replicate ---------------------------------------------------------------
    ReplicateOptions rep_options;
    std::string rep_out;
    auto* rep = app.add_subcommand(
        "replicate", "Re-derive every pinned fact and property suite; report pass/fail");
    rep->add_option("--out", rep_out, "Write the report to this path (default: stdout)");
    rep->add_option("--seed", rep_options.seed, "Seed for the property suites");
    rep->add_option("--only", rep_options.only, "Run only facts whose id contains this text");
    rep->callback([&] {
        const ReportDocument doc = run_replication(rep_options);
        const std::string text = render_report(doc);
        if (rep_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(rep_out, std::ios::binary);
            out << text;
            if (!out)
                throw IoError("cannot write report to " + rep_out);
        }
        exit_code = doc.all_passed() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_object("usage", e.what()));
        return 2;
    } catch (const Error& e) {
        emit(error_object(e.kind(), e.what()));
        return 2;
    } catch (const std::exception& e) {
        emit(error_object("internal", e.what()));
        return 2;
    }
    return exit_code;
}
