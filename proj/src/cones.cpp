#include "pinwheel/cones.hpp"

#include "pinwheel/enumeration.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/lattice.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pinwheel {

namespace {

const std::vector<HomologyClass>& cached_exceptional(int k) {
    static std::mutex guard;
    static std::map<int, std::vector<HomologyClass>> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, enumerate_exceptional(k)).first;
    return it->second;
}

void check_positive(ConeVerdict& verdict, std::string constraint, Rational value,
                    std::optional<HomologyClass> cls = std::nullopt) {
    if (value > 0)
        return;
    verdict.inside = false;
    verdict.violated.push_back(ConeViolation{std::move(constraint), std::move(cls), std::move(value)});
}

} // namespace

ConeVerdict symplectic_cone_contains(const PeriodVector& p) {
    ConeVerdict verdict;
    if (same_chart(p.chart, s2xs2_chart())) {
        check_positive(verdict, "area(A) > 0", p.values[0]);
        check_positive(verdict, "area(B) > 0", p.values[1]);
        return verdict;
    }
    const auto k = standard_xk_index(*p.chart);
    if (!k)
        throw UnsupportedChart("symplectic cone test needs std_Xk or S2xS2, got '" +
                               p.chart->name() + "'");
    check_positive(verdict, "volume > 0", volume(p));
    for (const auto& cls : cached_exceptional(*k))
        check_positive(verdict, "area(" + to_string(cls) + ") > 0", p.evaluate(cls), cls);
    return verdict;
}

ConeVerdict kahler_cone_x5_special(const Rational& alpha, const Rational& beta,
                                   const std::vector<Rational>& mu_tilde) {
    if (mu_tilde.size() != 4)
        throw DegenerateInput("Kahler cone test needs 4 mu values, got " +
                              std::to_string(mu_tilde.size()));
    ConeVerdict verdict;
    Rational vol = 2 * alpha * beta - 4 * beta * beta;
    for (const auto& m : mu_tilde)
        vol -= m * m;
    check_positive(verdict, "2*alpha*beta - 4*beta^2 - sum(mu_i^2) > 0", vol);
    for (int i = 0; i < 4; ++i) {
        std::ostringstream name;
        name << "mu" << i << " > 0";
        check_positive(verdict, name.str(), mu_tilde[i]);
    }
    check_positive(verdict, "beta - mu0 > 0", beta - mu_tilde[0]);
    check_positive(verdict, "alpha > 0", alpha);
    check_positive(verdict, "mu0 - mu1 - mu2 - mu3 > 0",
                   mu_tilde[0] - mu_tilde[1] - mu_tilde[2] - mu_tilde[3]);
    check_positive(verdict, "alpha - 4*beta > 0", alpha - 4 * beta);
    return verdict;
}

ConeVerdict kahler_cone_x5_special(const PeriodVector& p) {
    if (!same_chart(p.chart, x5_special_chart()))
        throw UnsupportedChart("Kahler cone test needs the X5_special chart, got '" +
                               p.chart->name() + "'");
    return kahler_cone_x5_special(x5_alpha(p), x5_beta(p), x5_mu_tilde(p));
}

bool is_monotone(const PeriodVector& p) {
    if (same_chart(p.chart, s2xs2_chart()))
        return p.values[0] == p.values[1] && p.values[0] > 0;
    const auto k = standard_xk_index(*p.chart);
    if (!k)
        throw UnsupportedChart("monotonicity test needs std_Xk or S2xS2, got '" +
                               p.chart->name() + "'");
    const Rational h = p.values[0];
    if (h <= 0)
        return false;
    for (int i = 1; i <= *k; ++i)
        if (3 * p.values[i] != h)
            return false;
    return symplectic_cone_contains(p).inside;
}

HomologyClass std_x5_to_special(const HomologyClass& cls) {
    if (!same_chart(cls.chart, std_xk_chart(5)))
        throw UnsupportedChart("basis translation needs std_X5, got '" + cls.chart->name() + "'");
    // Images of (H, E1..E5) in (Zinf, F, Et0, Et1, Et2, Et3) coordinates.
    static const Coeff image[6][6] = {
        {1, 3, -1, 0, 0, 0}, // H
        {0, 1, -1, 0, 0, 0}, // E1
        {1, 2, -1, 0, 0, 0}, // E2
        {0, 0, 0, 1, 0, 0},  // E3
        {0, 0, 0, 0, 1, 0},  // E4
        {0, 0, 0, 0, 0, 1},  // E5
    };
    std::vector<Coeff> out(6, 0);
    for (int src = 0; src < 6; ++src)
        for (int dst = 0; dst < 6; ++dst)
            out[dst] += cls.coeffs[src] * image[src][dst];
    return make_class(x5_special_chart(), std::move(out));
}

} // namespace pinwheel
