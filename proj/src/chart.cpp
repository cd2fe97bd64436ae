#include "pinwheel/chart.hpp"

#include "pinwheel/errors.hpp"
#include "pinwheel/intmath.hpp"

#include <map>
#include <sstream>

namespace pinwheel {

ChartPtr Chart::make(std::string name, std::vector<std::string> labels,
                     std::vector<std::vector<Coeff>> gram, std::vector<Coeff> c1) {
    const std::size_t n = labels.size();
    if (n == 0)
        throw DegenerateInput("chart needs at least one basis class");
    if (gram.size() != n || c1.size() != n)
        throw DegenerateInput("chart '" + name + "': gram/c1 size does not match basis");
    intmath::IntMat g(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n)
            throw DegenerateInput("chart '" + name + "': gram matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[i][j] != gram[j][i])
                throw DegenerateInput("chart '" + name + "': gram matrix not symmetric");
            g[i][j] = gram[i][j];
        }
    }
    const BigInt det = intmath::determinant(g);
    if (det != 1 && det != -1)
        throw DegenerateInput("chart '" + name + "': gram determinant is " + det.str() +
                              ", lattice must be unimodular");
    return ChartPtr(new Chart(std::move(name), std::move(labels), std::move(gram), std::move(c1)));
}

bool Chart::operator==(const Chart& other) const {
    return name_ == other.name_ && labels_ == other.labels_ &&
           gram_ == other.gram_ && c1_ == other.c1_;
}

namespace {

ChartPtr build_std_xk(int k) {
    std::vector<std::string> labels{"H"};
    for (int i = 1; i <= k; ++i)
        labels.push_back("E" + std::to_string(i));
    const std::size_t n = labels.size();
    std::vector<std::vector<Coeff>> gram(n, std::vector<Coeff>(n, 0));
    gram[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i)
        gram[i][i] = -1;
    std::vector<Coeff> c1(n, -1);
    c1[0] = 3;
    return Chart::make("std_X" + std::to_string(k), std::move(labels), std::move(gram),
                       std::move(c1));
}

ChartPtr build_s2xs2() {
    return Chart::make("S2xS2", {"A", "B"}, {{0, 1}, {1, 0}}, {2, 2});
}

ChartPtr build_x5_special() {
    std::vector<std::string> labels{"Zinf", "F", "Et0", "Et1", "Et2", "Et3"};
    std::vector<std::vector<Coeff>> gram(6, std::vector<Coeff>(6, 0));
    gram[0][0] = -4;
    gram[0][1] = gram[1][0] = 1;
    for (int i = 2; i < 6; ++i)
        gram[i][i] = -1;
    std::vector<Coeff> c1{2, 6, -1, -1, -1, -1};
    ChartPtr chart = Chart::make("X5_special", std::move(labels), std::move(gram), std::move(c1));
    // Basis spheres must satisfy adjunction: c1 on each equals 2 + square.
    for (std::size_t i = 0; i < 6; ++i) {
        Coeff c1_val = 0;
        for (std::size_t a = 0; a < 6; ++a)
            c1_val += chart->c1_class()[a] * chart->gram()[a][i];
        if (c1_val != 2 + chart->gram()[i][i])
            throw std::logic_error("X5_special basis sphere fails adjunction");
    }
    return chart;
}

const std::map<std::string, ChartPtr>& registry() {
    static const std::map<std::string, ChartPtr> charts = [] {
        std::map<std::string, ChartPtr> m;
        for (int k = 0; k <= 8; ++k)
            m["std_X" + std::to_string(k)] = build_std_xk(k);
        m["S2xS2"] = build_s2xs2();
        m["X5_special"] = build_x5_special();
        return m;
    }();
    return charts;
}

} // namespace

ChartPtr std_xk_chart(int k) {
    if (k < 0 || k > 8)
        throw UnsupportedChart("std_Xk charts exist for 0 <= k <= 8, got k=" + std::to_string(k));
    return registry().at("std_X" + std::to_string(k));
}

ChartPtr s2xs2_chart() { return registry().at("S2xS2"); }

ChartPtr x5_special_chart() { return registry().at("X5_special"); }

ChartPtr find_chart(const std::string& name) {
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end())
        throw UnsupportedChart("unknown chart '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_chart_names() {
    std::vector<std::string> names;
    for (const auto& [name, chart] : registry())
        names.push_back(name);
    return names;
}

std::optional<int> standard_xk_index(const Chart& chart) {
    const int k = static_cast<int>(chart.rank()) - 1;
    if (k < 0 || k > 8)
        return std::nullopt;
    if (chart == *std_xk_chart(k))
        return k;
    return std::nullopt;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

namespace {

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
    if (!same_chart(a, b))
        throw ChartMismatch(std::string(what) + ": charts '" + (a ? a->name() : "<null>") +
                            "' and '" + (b ? b->name() : "<null>") + "' differ");
}

} // namespace

bool HomologyClass::operator==(const HomologyClass& o) const {
    return same_chart(chart, o.chart) && coeffs == o.coeffs;
}

bool HomologyClass::operator<(const HomologyClass& o) const {
    require_same_chart(chart, o.chart, "class comparison");
    return coeffs < o.coeffs;
}

HomologyClass make_class(ChartPtr chart, std::vector<Coeff> coeffs) {
    if (!chart)
        throw DegenerateInput("class needs a chart");
    if (coeffs.size() != chart->rank())
        throw DegenerateInput("class on '" + chart->name() + "' needs " +
                              std::to_string(chart->rank()) + " coefficients, got " +
                              std::to_string(coeffs.size()));
    return HomologyClass{std::move(chart), std::move(coeffs)};
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    require_same_chart(a.chart, b.chart, "class addition");
    std::vector<Coeff> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeffs[i] + b.coeffs[i];
    return HomologyClass{a.chart, std::move(c)};
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
    require_same_chart(a.chart, b.chart, "class subtraction");
    std::vector<Coeff> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeffs[i] - b.coeffs[i];
    return HomologyClass{a.chart, std::move(c)};
}

HomologyClass operator*(Coeff s, const HomologyClass& a) {
    std::vector<Coeff> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = s * a.coeffs[i];
    return HomologyClass{a.chart, std::move(c)};
}

bool ModClass::operator==(const ModClass& o) const {
    return same_chart(chart, o.chart) && modulus == o.modulus && coeffs == o.coeffs;
}

bool ModClass::operator<(const ModClass& o) const {
    require_same_chart(chart, o.chart, "mod-class comparison");
    if (modulus != o.modulus)
        return modulus < o.modulus;
    return coeffs < o.coeffs;
}

Rational PeriodVector::evaluate(const HomologyClass& cls) const {
    require_same_chart(chart, cls.chart, "period evaluation");
    Rational total = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        total += values[i] * cls.coeffs[i];
    return total;
}

PeriodVector make_periods(ChartPtr chart, std::vector<Rational> values) {
    if (!chart)
        throw DegenerateInput("period vector needs a chart");
    if (values.size() != chart->rank())
        throw DegenerateInput("period vector on '" + chart->name() + "' needs " +
                              std::to_string(chart->rank()) + " values, got " +
                              std::to_string(values.size()));
    return PeriodVector{std::move(chart), std::move(values)};
}

PeriodVector periods_std(int k, const Rational& h, const std::vector<Rational>& mu) {
    if (static_cast<int>(mu.size()) != k)
        throw DegenerateInput("periods_std(k=" + std::to_string(k) + ") needs " +
                              std::to_string(k) + " mu values");
    std::vector<Rational> values{h};
    values.insert(values.end(), mu.begin(), mu.end());
    return make_periods(std_xk_chart(k), std::move(values));
}

PeriodVector periods_s2xs2(const Rational& a, const Rational& b) {
    return make_periods(s2xs2_chart(), {a, b});
}

PeriodVector periods_x5_special(const Rational& alpha, const Rational& beta,
                                const std::vector<Rational>& mu_tilde) {
    if (mu_tilde.size() != 4)
        throw DegenerateInput("X5_special periods need 4 mu~ values");
    std::vector<Rational> values{alpha - 4 * beta, beta};
    values.insert(values.end(), mu_tilde.begin(), mu_tilde.end());
    return make_periods(x5_special_chart(), std::move(values));
}

namespace {

void require_x5_special(const PeriodVector& p) {
    if (!same_chart(p.chart, x5_special_chart()))
        throw ChartMismatch("expected X5_special periods, got '" + p.chart->name() + "'");
}

} // namespace

Rational x5_alpha(const PeriodVector& p) {
    require_x5_special(p);
    return p.values[0] + 4 * p.values[1];
}

Rational x5_beta(const PeriodVector& p) {
    require_x5_special(p);
    return p.values[1];
}

std::vector<Rational> x5_mu_tilde(const PeriodVector& p) {
    require_x5_special(p);
    return {p.values[2], p.values[3], p.values[4], p.values[5]};
}

namespace {

std::string render_terms(const std::vector<std::string>& labels, const std::vector<Coeff>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Coeff c = coeffs[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        const Coeff mag = c < 0 ? -c : c;
        if (mag != 1)
            out << mag << "*";
        out << labels[i];
        first = false;
    }
    if (first)
        return "0";
    return out.str();
}

} // namespace

std::string to_string(const HomologyClass& cls) {
    return render_terms(cls.chart->basis_labels(), cls.coeffs);
}

std::string to_string(const ModClass& cls) {
    return render_terms(cls.chart->basis_labels(), cls.coeffs);
}

} // namespace pinwheel
