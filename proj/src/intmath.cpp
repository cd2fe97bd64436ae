#include "pinwheel/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinwheel::intmath {

BigInt isqrt(const BigInt& n) {
    if (n < 0)
        throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

BigInt determinant(const IntMat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    if (n == 0)
        return 1;

    // Fraction-free Bareiss elimination.
    IntMat a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMat hnf_rows(IntMat m) {
    if (m.empty())
        return m;
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        // Reduce rows >= pivot_row so that only one of them is nonzero in
        // this column (gcd elimination by repeated division).
        while (true) {
            std::size_t best = m.size();
            for (std::size_t r = pivot_row; r < m.size(); ++r) {
                if (m[r][col] == 0)
                    continue;
                if (best == m.size() || abs(m[r][col]) < abs(m[best][col]))
                    best = r;
            }
            if (best == m.size())
                break; // column is zero below pivot_row
            std::swap(m[pivot_row], m[best]);
            bool others = false;
            for (std::size_t r = pivot_row + 1; r < m.size(); ++r) {
                if (m[r][col] == 0)
                    continue;
                const BigInt q = m[r][col] / m[pivot_row][col];
                for (std::size_t j = 0; j < cols; ++j)
                    m[r][j] -= q * m[pivot_row][j];
                if (m[r][col] != 0)
                    others = true;
            }
            if (!others)
                break;
        }
        if (m[pivot_row][col] == 0)
            continue;
        if (m[pivot_row][col] < 0)
            for (std::size_t j = 0; j < cols; ++j)
                m[pivot_row][j] = -m[pivot_row][j];
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < pivot_row; ++r) {
            if (m[r][col] == 0)
                continue;
            BigInt q = m[r][col] / m[pivot_row][col];
            if (m[r][col] - q * m[pivot_row][col] < 0)
                q -= 1;
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] -= q * m[pivot_row][j];
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

IntMat kernel_basis(const IntMat& m) {
    if (m.empty())
        throw std::invalid_argument("kernel_basis: need at least one row to know the width");
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();

    // Column-reduce a working copy of m while mirroring every column
    // operation on an identity block; columns that end up zero in the top
    // block have their identity column as a kernel vector.
    IntMat top = m;
    IntMat id(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i)
        id[i][i] = 1;

    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r)
            std::swap(top[r][a], top[r][b]);
        for (std::size_t r = 0; r < cols; ++r)
            std::swap(id[r][a], id[r][b]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        // column dst -= q * column src
        for (std::size_t r = 0; r < rows; ++r)
            top[r][dst] -= q * top[r][src];
        for (std::size_t r = 0; r < cols; ++r)
            id[r][dst] -= q * id[r][src];
    };

    std::size_t lead = 0;
    for (std::size_t row = 0; row < rows && lead < cols; ++row) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = lead; c < cols; ++c) {
                if (top[row][c] == 0)
                    continue;
                if (best == cols || abs(top[row][c]) < abs(top[row][best]))
                    best = c;
            }
            if (best == cols)
                break;
            col_swap(lead, best);
            bool others = false;
            for (std::size_t c = lead + 1; c < cols; ++c) {
                if (top[row][c] == 0)
                    continue;
                col_axpy(c, lead, top[row][c] / top[row][lead]);
                if (top[row][c] != 0)
                    others = true;
            }
            if (!others)
                break;
        }
        if (top[row][lead] != 0)
            ++lead;
    }

    IntMat kernel;
    for (std::size_t c = lead; c < cols; ++c) {
        std::vector<BigInt> v(cols);
        for (std::size_t r = 0; r < cols; ++r)
            v[r] = id[r][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<Rational> solve_rational(const IntMat& a, const std::vector<Rational>& rhs) {
    const std::size_t n = a.size();
    if (rhs.size() != n)
        throw std::invalid_argument("solve_rational: dimension mismatch");
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("solve_rational: matrix not square");
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = Rational(a[i][j]);
        aug[i][n] = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::invalid_argument("solve_rational: singular matrix");
        std::swap(aug[col], aug[piv]);
        const Rational inv = aug[col][col];
        for (std::size_t j = col; j <= n; ++j)
            aug[col][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0)
                continue;
            const Rational f = aug[i][col];
            for (std::size_t j = col; j <= n; ++j)
                aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug[i][n];
    return x;
}

bool in_row_span(const IntMat& basis, const std::vector<BigInt>& v) {
    // Reduce v against the HNF of the basis; v is in the span iff it reduces
    // to zero using integer multiples of the pivots.
    IntMat h = hnf_rows(basis);
    std::vector<BigInt> w = v;
    const std::size_t cols = w.size();
    for (const auto& row : h) {
        std::size_t p = 0;
        while (p < cols && row[p] == 0)
            ++p;
        if (p == cols)
            continue;
        if (w[p] % row[p] != 0)
            continue; // cannot clear exactly; leftover will be nonzero below
        const BigInt q = w[p] / row[p];
        for (std::size_t j = 0; j < cols; ++j)
            w[j] -= q * row[j];
    }
    for (const auto& x : w)
        if (x != 0)
            return false;
    return true;
}

} // namespace pinwheel::intmath
