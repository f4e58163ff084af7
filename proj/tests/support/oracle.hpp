#pragma once

#include "polyred/bigpoly.hpp"

namespace polyred::testoracle {

// Brute-force reducibility over Q, independent of the factorint pipeline:
// searches for a divisor of degree 1..deg/2 with positive leading coefficient
// dividing the lead, constant coefficient dividing the constant, remaining
// coefficients pinned by the divisor's values at +-1 and bounded by the
// Mignotte-style bound, decided by exact trial division in int64 arithmetic.
// Supports degree <= 7 with small coefficients (all intermediates must fit
// comfortably in int64).
bool oracle_is_reducible(const IntPolynomial& p);

} // namespace polyred::testoracle
