#pragma once

#include "pinwheel/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pinwheel {

using Coeff = long long;

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

// An immutable basis chart for H_2 of a rational 4-manifold: labelled basis,
// symmetric unimodular Gram matrix, and the anticanonical class written in
// that basis. All classes, periods and mod-n reductions carry their chart,
// and operations refuse to mix charts.
class Chart {
public:
    static ChartPtr make(std::string name,
                         std::vector<std::string> basis_labels,
                         std::vector<std::vector<Coeff>> gram,
                         std::vector<Coeff> c1_class);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<std::vector<Coeff>>& gram() const { return gram_; }
    const std::vector<Coeff>& c1_class() const { return c1_; }

    bool operator==(const Chart& other) const;
    bool operator!=(const Chart& other) const { return !(*this == other); }

private:
    Chart(std::string name, std::vector<std::string> labels,
          std::vector<std::vector<Coeff>> gram, std::vector<Coeff> c1)
        : name_(std::move(name)), labels_(std::move(labels)),
          gram_(std::move(gram)), c1_(std::move(c1)) {}

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Coeff>> gram_;
    std::vector<Coeff> c1_;
};

// Built-in charts. std_Xk has basis (H, E1..Ek), Gram diag(1, -1, ..., -1)
// and c1 = 3H - E1 - ... - Ek. S2xS2 has basis (A, B), hyperbolic Gram and
// c1 = 2A + 2B. X5_special has basis (Zinf, F, Et0..Et3) with
// Gram [[-4,1],[1,0]] (+) diag(-1,-1,-1,-1) and c1 = 2Zinf + 6F - sum(Eti);
// c1 on each basis sphere satisfies the adjunction value 2 + square.
ChartPtr std_xk_chart(int k);
ChartPtr s2xs2_chart();
ChartPtr x5_special_chart();

// Lookup by name ("std_X0".."std_X8", "S2xS2", "X5_special"); throws
// UnsupportedChart for anything else.
ChartPtr find_chart(const std::string& name);
std::vector<std::string> builtin_chart_names();

// If the chart is (structurally) one of the standard blow-up charts, its k.
std::optional<int> standard_xk_index(const Chart& chart);

bool same_chart(const ChartPtr& a, const ChartPtr& b);

// An integral class in a chart's basis.
struct HomologyClass {
    ChartPtr chart;
    std::vector<Coeff> coeffs;

    bool operator==(const HomologyClass& o) const;
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }
    // Lexicographic on coefficients; requires equal charts. Used as the
    // canonical order for enumeration output and orbit representatives.
    bool operator<(const HomologyClass& o) const;
};

HomologyClass make_class(ChartPtr chart, std::vector<Coeff> coeffs);
HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
HomologyClass operator*(Coeff s, const HomologyClass& a);

// A mod-n reduced class; coefficients normalized into [0, n).
struct ModClass {
    ChartPtr chart;
    long long modulus = 0;
    std::vector<Coeff> coeffs;

    bool operator==(const ModClass& o) const;
    bool operator!=(const ModClass& o) const { return !(*this == o); }
    bool operator<(const ModClass& o) const;
};

// Periods of a (candidate) symplectic form: the value of the form on each
// basis class. Evaluation on an arbitrary class is plain linearity.
struct PeriodVector {
    ChartPtr chart;
    std::vector<Rational> values;

    Rational evaluate(const HomologyClass& cls) const;
};

PeriodVector make_periods(ChartPtr chart, std::vector<Rational> values);
// std_Xk periods from (h; mu_1..mu_k).
PeriodVector periods_std(int k, const Rational& h, const std::vector<Rational>& mu);
// S2xS2 periods (a, b).
PeriodVector periods_s2xs2(const Rational& a, const Rational& b);
// X5_special periods from the (alpha, beta, mu~_0..mu~_3) parametrization:
// basis values are (alpha - 4*beta, beta, mu~_0..mu~_3).
PeriodVector periods_x5_special(const Rational& alpha, const Rational& beta,
                                const std::vector<Rational>& mu_tilde);

// Recover (alpha, beta, mu~) from an X5_special period vector.
Rational x5_alpha(const PeriodVector& p);
Rational x5_beta(const PeriodVector& p);
std::vector<Rational> x5_mu_tilde(const PeriodVector& p);

// A class with rational coefficients (e.g. a Poincare dual).
struct RationalClass {
    ChartPtr chart;
    std::vector<Rational> coeffs;
};

// Pretty-printing with basis labels: "2H-E1-E2", "H", "0".
std::string to_string(const HomologyClass& cls);
std::string to_string(const ModClass& cls);

} // namespace pinwheel
