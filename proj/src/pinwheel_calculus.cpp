#include "pinwheel/pinwheel_calculus.hpp"

#include "pinwheel/cones.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/lattice.hpp"

#include <sstream>

namespace pinwheel {

namespace {

void require_three_mu(const std::vector<Rational>& mu) {
    if (mu.size() != 3)
        throw DegenerateInput("expected 3 mu values, got " + std::to_string(mu.size()));
}

void require_x3_cone(const Rational& h, const std::vector<Rational>& mu) {
    const ConeVerdict verdict = symplectic_cone_contains(periods_std(3, h, mu));
    if (verdict.inside)
        return;
    std::ostringstream msg;
    msg << "(" << rational_to_string(h);
    for (const auto& m : mu)
        msg << ";" << rational_to_string(m);
    msg << ") is not in the X3 symplectic cone; first violated: " << verdict.violated[0].constraint;
    throw NotInSymplecticCone(msg.str());
}

// min over k of (mu_i + mu_j - mu_k): positive iff the strict triangle
// inequality holds.
Rational min_triangle_slack(const std::vector<Rational>& mu) {
    const Rational sum = mu[0] + mu[1] + mu[2];
    Rational slack = sum - 2 * mu[0];
    for (int k = 1; k < 3; ++k) {
        const Rational s = sum - 2 * mu[k];
        if (s < slack)
            slack = s;
    }
    return slack;
}

void require_both_planes(const Rational& h, const std::vector<Rational>& mu) {
    if (!rp2_exists_H(h, mu))
        throw LagrangianAbsent("H", "no Lagrangian projective plane in class H: some mu_k >= h/2");
    if (!rp2_exists_sum(h, mu))
        throw LagrangianAbsent("E1+E2+E3",
                               "no Lagrangian projective plane in class E1+E2+E3: "
                               "mu violate the strict triangle inequality");
}

std::vector<Rational> transported_mu(const std::vector<Rational>& mu, const Rational& eps) {
    const Rational sum = mu[0] + mu[1] + mu[2];
    std::vector<Rational> out{sum / 2 + eps};
    for (int k = 0; k < 3; ++k)
        out.push_back((sum - 2 * mu[k]) / 2 - eps);
    return out;
}

} // namespace

bool rp2_exists_sum(const Rational& h, const std::vector<Rational>& mu) {
    require_three_mu(mu);
    require_x3_cone(h, mu);
    return min_triangle_slack(mu) > 0;
}

bool rp2_exists_H(const Rational& h, const std::vector<Rational>& mu) {
    require_three_mu(mu);
    require_x3_cone(h, mu);
    for (const auto& m : mu)
        if (2 * m >= h)
            return false;
    return true;
}

bool rp2_disjoinable(const Rational& h, const std::vector<Rational>& mu) {
    require_three_mu(mu);
    require_x3_cone(h, mu);
    require_both_planes(h, mu);
    return mu[0] + mu[1] + mu[2] < h;
}

FeasibilityReport two_rp2_witness(const Rational& h, const std::vector<Rational>& mu) {
    require_three_mu(mu);
    require_x3_cone(h, mu);
    require_both_planes(h, mu);

    const Rational sum = mu[0] + mu[1] + mu[2];
    if (sum >= h) {
        FeasibilityReport report;
        report.feasible = false;
        std::ostringstream msg;
        msg << "beta window empty: need mu~0 < beta < h/2, but mu~0 = (mu1+mu2+mu3)/2 + eps2 "
            << "with sum(mu) = " << rational_to_string(sum) << " >= h = " << rational_to_string(h);
        report.obstruction = msg.str();
        return report;
    }

    const Rational alpha = 2 * h;
    Rational eps2 = min_triangle_slack(mu) / 8;
    Rational eps1 = (h - sum) / 2 - eps2;
    if (eps1 <= 0)
        eps1 = (h - sum) / 4; // the seed eps2 can eat the whole gap; restart smaller
    for (;;) {
        const Rational beta = h / 2 - eps1;
        const std::vector<Rational> mu_tilde = transported_mu(mu, eps2);
        if (kahler_cone_x5_special(alpha, beta, mu_tilde).inside) {
            FeasibilityReport report;
            report.feasible = true;
            report.witness = TransportWitness{x5_special_chart(),
                                              periods_x5_special(alpha, beta, mu_tilde),
                                              {eps1, eps2}};
            return report;
        }
        eps1 /= 2;
        eps2 /= 2;
    }
}

TransportWitness transport_rp2_blowup(const Rational& h, const std::vector<Rational>& mu,
                                      const Rational& eps) {
    require_three_mu(mu);
    const Rational slack = min_triangle_slack(mu);
    if (slack <= 0)
        throw TriangleViolated("mu must satisfy the strict triangle inequality; slack = " +
                               rational_to_string(slack));
    if (eps <= 0 || 2 * eps >= slack)
        throw EpsilonOutOfRange("need 0 < eps < " + rational_to_string(slack / 2) + ", got " +
                                rational_to_string(eps));
    std::vector<Rational> values{h};
    for (auto& v : transported_mu(mu, eps))
        values.push_back(std::move(v));
    return TransportWitness{std_xk_chart(4), make_periods(std_xk_chart(4), std::move(values)),
                            {eps}};
}

std::pair<std::vector<Rational>, Rational>
transport_rp2_blowdown(const std::vector<Rational>& mu_tilde) {
    if (mu_tilde.size() != 4)
        throw DegenerateInput("expected 4 mu~ values, got " + std::to_string(mu_tilde.size()));
    for (const auto& m : mu_tilde)
        if (m <= 0)
            throw DegenerateInput("all mu~ must be positive, got " + rational_to_string(m));
    const Rational gap = mu_tilde[0] - mu_tilde[1] - mu_tilde[2] - mu_tilde[3];
    if (gap <= 0)
        throw DegenerateInput("need mu~0 - mu~1 - mu~2 - mu~3 > 0, got " +
                              rational_to_string(gap));
    const Rational eps = gap / 4;
    std::vector<Rational> mu;
    for (int k = 1; k <= 3; ++k)
        mu.push_back(mu_tilde[0] - 2 * eps - mu_tilde[k]);
    return {std::move(mu), eps};
}

HomologyClass rp2_complement_map(const HomologyClass& cls) {
    if (!same_chart(cls.chart, std_xk_chart(3)))
        throw ChartMismatch("complement map needs a std_X3 class, got chart '" +
                            cls.chart->name() + "'");
    const Coeff d = cls.coeffs[0];
    const Coeff m1 = cls.coeffs[1], m2 = cls.coeffs[2], m3 = cls.coeffs[3];
    if (d != 0 || (m1 + m2 + m3) % 2 != 0)
        throw OutsideDomainSpan("class " + to_string(cls) +
                                " is not in span{E1-E2, E2-E3, 2*E1}");
    // Decompose as x*(2E1) + y*(E1-E2) + z*(E2-E3).
    const Coeff z = -m3;
    const Coeff y = -m2 - m3;
    const Coeff x = (m1 + m2 + m3) / 2;
    // Generator images on std_X4, writing E~i as E(i+1):
    //   2E1 |-> E~0 - E~1 + E~2 + E~3, E1-E2 |-> E~2 - E~1, E2-E3 |-> E~3 - E~2.
    return make_class(std_xk_chart(4), {0, x, -x - y, x + y - z, x + z});
}

PeriodVector l31_solve(const Rational& a, const Rational& b, const Rational& eps1,
                       const Rational& eps2) {
    if (a <= 0 || b <= 0 || eps1 <= 0 || eps2 <= 0)
        throw NonPositiveInput("l31_solve needs a, b, eps1, eps2 all positive");
    const Rational h = a + b + 3 * eps1 - 3 * eps2;
    const Rational mu1 = 2 * (a + b) / 3 + 5 * eps1 - 2 * eps2;
    const Rational mu2 = (2 * a - b) / 3 - (eps1 + 5 * eps2);
    const Rational mu3 = (2 * b - a) / 3 - (eps1 + 5 * eps2);
    return periods_std(3, h, {mu1, mu2, mu3});
}

bool l31_exists(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0)
        throw NonPositiveInput("l31_exists needs a, b positive");
    return b < 2 * a && a < 2 * b;
}

FeasibilityReport l31_witness(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0)
        throw NonPositiveInput("l31_witness needs a, b positive");
    FeasibilityReport report;
    if (2 * b <= a) {
        report.obstruction = "mu3 side: mu3 -> (2b-a)/3 <= 0 with 2b-a = " +
                             rational_to_string(2 * b - a);
        return report;
    }
    if (2 * a <= b) {
        report.obstruction = "mu2 side: mu2 -> (2a-b)/3 <= 0 with 2a-b = " +
                             rational_to_string(2 * a - b);
        return report;
    }
    const Rational first = 2 * a - b, second = 2 * b - a;
    Rational eps = (first < second ? first : second) / 100;
    for (;;) {
        PeriodVector p = l31_solve(a, b, eps, eps);
        if (symplectic_cone_contains(p).inside) {
            report.feasible = true;
            report.witness = TransportWitness{std_xk_chart(3), std::move(p), {eps, eps}};
            return report;
        }
        eps /= 2;
    }
}

ChartPtr blowup_target(const ChartPtr& source, const std::vector<PinwheelType>& pinwheels) {
    int b2 = 0;
    if (same_chart(source, s2xs2_chart())) {
        b2 = 2;
    } else {
        const auto k = standard_xk_index(*source);
        if (!k)
            throw UnsupportedInput("blow-up source must be std_Xk or S2xS2, got '" +
                                   source->name() + "'");
        b2 = *k + 1;
    }
    if (pinwheels.empty())
        return source;
    for (const PinwheelType p : pinwheels)
        b2 += (p == PinwheelType::L21) ? 1 : 2;
    if (b2 == 2)
        return s2xs2_chart(); // one plane in X0: the blow-up is S2xS2, not X1
    if (b2 - 1 > 8)
        throw UnsupportedInput("blow-up target X" + std::to_string(b2 - 1) +
                               " is beyond the supported charts (X8)");
    return std_xk_chart(b2 - 1);
}

RigidityAnswer del_pezzo_rp2_pair_must_intersect(int k) {
    if (k < 3 || k > 6)
        throw UnsupportedInput("del Pezzo rigidity is stated for 3 <= k <= 6, got " +
                               std::to_string(k) + (k == 7 || k == 8 ? " (open case)" : ""));
    if (k == 3) {
        const Rational one(1);
        return RigidityAnswer{!rp2_disjoinable(3, {one, one, one}), DerivationMode::Computed};
    }
    return RigidityAnswer{true, DerivationMode::Recorded};
}

} // namespace pinwheel
