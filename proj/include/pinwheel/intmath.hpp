#pragma once

#include "pinwheel/rational.hpp"

#include <vector>

// Small exact linear-algebra helpers over Z and Q. Everything here works on
// tiny matrices (rank <= 9 plus a few constraint rows), so clarity wins over
// asymptotics. BigInt is used internally so intermediate values never
// overflow regardless of user-supplied chart data.

namespace pinwheel::intmath {

using IntMat = std::vector<std::vector<BigInt>>;

// floor(sqrt(n)) for n >= 0; throws std::domain_error for n < 0.
BigInt isqrt(const BigInt& n);

// Determinant of a square matrix, exact.
BigInt determinant(const IntMat& m);

// Hermite normal form of the row span: row-echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped. The result
// is the unique canonical basis of the integer row span.
IntMat hnf_rows(IntMat m);

// Basis (as rows) of { x : m * x = 0 } over Z, via unimodular column
// reduction. Deterministic.
IntMat kernel_basis(const IntMat& m);

// Solves a * x = rhs exactly over Q. Requires a square and invertible.
std::vector<Rational> solve_rational(const IntMat& a, const std::vector<Rational>& rhs);

// Whether v lies in the integer row span of basis (basis need not be square).
bool in_row_span(const IntMat& basis, const std::vector<BigInt>& v);

} // namespace pinwheel::intmath
