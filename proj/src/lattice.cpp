#include "pinwheel/lattice.hpp"

#include "pinwheel/errors.hpp"
#include "pinwheel/intmath.hpp"

namespace pinwheel {

namespace {

void require_same_chart(const HomologyClass& a, const HomologyClass& b, const char* what) {
    if (!same_chart(a.chart, b.chart))
        throw ChartMismatch(std::string(what) + ": charts '" + a.chart->name() + "' and '" +
                            b.chart->name() + "' differ");
}

void require_modulus(long long n) {
    if (n < 2)
        throw UnsupportedModulus("modulus must be >= 2, got " + std::to_string(n));
}

long long positive_mod(long long v, long long n) {
    const long long r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

Coeff pairing(const HomologyClass& a, const HomologyClass& b) {
    require_same_chart(a, b, "pairing");
    const auto& g = a.chart->gram();
    Coeff total = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0)
            continue;
        Coeff row = 0;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            row += g[i][j] * b.coeffs[j];
        total += a.coeffs[i] * row;
    }
    return total;
}

Coeff square(const HomologyClass& a) { return pairing(a, a); }

Coeff c1(const HomologyClass& a) {
    const HomologyClass c1_cls{a.chart, a.chart->c1_class()};
    return pairing(c1_cls, a);
}

bool satisfies_sphere_adjunction(const HomologyClass& a) {
    return c1(a) == 2 + square(a);
}

ModClass reduce_mod(const HomologyClass& a, long long n) {
    require_modulus(n);
    std::vector<Coeff> r(a.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = positive_mod(a.coeffs[i], n);
    return ModClass{a.chart, n, std::move(r)};
}

Coeff pairing_mod(const HomologyClass& a, const HomologyClass& b, long long n) {
    require_modulus(n);
    return positive_mod(pairing(a, b), n);
}

Coeff pairing_mod(const ModClass& a, const ModClass& b) {
    if (!same_chart(a.chart, b.chart))
        throw ChartMismatch("pairing_mod: charts differ");
    if (a.modulus != b.modulus)
        throw UnsupportedModulus("pairing_mod: moduli differ (" + std::to_string(a.modulus) +
                                 " vs " + std::to_string(b.modulus) + ")");
    const HomologyClass la{a.chart, a.coeffs};
    const HomologyClass lb{b.chart, b.coeffs};
    return pairing_mod(la, lb, a.modulus);
}

RationalClass poincare_dual(const PeriodVector& p) {
    const std::size_t n = p.chart->rank();
    intmath::IntMat g(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = p.chart->gram()[i][j];
    // pd . e_i = (gram * pd)_i, so pd = гram^{-1} * values; the Gram matrix is
    // unimodular so the solve is always possible.
    return RationalClass{p.chart, intmath::solve_rational(g, p.values)};
}

Rational volume(const PeriodVector& p) {
    const RationalClass pd = poincare_dual(p);
    // pd . pd = values^T gram^{-1} values = values . pd.
    Rational total = 0;
    for (std::size_t i = 0; i < p.values.size(); ++i)
        total += p.values[i] * pd.coeffs[i];
    return total;
}

std::vector<HomologyClass> perp_sublattice_mod(const std::vector<HomologyClass>& classes,
                                               long long n) {
    require_modulus(n);
    if (classes.empty())
        throw DegenerateInput("perp_sublattice_mod: empty class list has no chart; "
                              "pass at least one class");
    const ChartPtr chart = classes.front().chart;
    const std::size_t r = chart->rank();
    for (const auto& c : classes)
        if (!same_chart(c.chart, chart))
            throw ChartMismatch("perp_sublattice_mod: classes on different charts");

    // x is in the sublattice iff (gram*c) . x == 0 mod n for every input c:
    // solve [rows | n*I] * (x, y) = 0 over Z and project onto the x part.
    const std::size_t m = classes.size();
    intmath::IntMat a(m, std::vector<BigInt>(r + m, 0));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t j = 0; j < r; ++j) {
            BigInt v = 0;
            for (std::size_t i = 0; i < r; ++i)
                v += BigInt(chart->gram()[j][i]) * classes[row].coeffs[i];
            a[row][j] = v;
        }
        a[row][r + row] = n;
    }
    const intmath::IntMat kernel = intmath::kernel_basis(a);
    intmath::IntMat basis;
    for (const auto& v : kernel)
        basis.emplace_back(v.begin(), v.begin() + r);
    basis = intmath::hnf_rows(std::move(basis));
    if (basis.size() != r)
        throw std::logic_error("perp_sublattice_mod: expected a full-rank sublattice");

    std::vector<HomologyClass> result;
    result.reserve(r);
    for (const auto& row : basis) {
        std::vector<Coeff> coeffs(r);
        for (std::size_t j = 0; j < r; ++j)
            coeffs[j] = static_cast<Coeff>(row[j]);
        result.push_back(make_class(chart, std::move(coeffs)));
    }
    return result;
}

} // namespace pinwheel
