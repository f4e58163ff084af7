#pragma once

#include "polyred/bigpoly.hpp"
#include "polyred/rng.hpp"

#include <cstdint>
#include <vector>

namespace polyred {

/// Square matrix with every entry +1 or -1.
class SignMatrix {
public:
    explicit SignMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, 1) {}

    int dim() const { return dim_; }
    int entry(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }
    void set(int r, int c, int v) { e_[static_cast<size_t>(r) * dim_ + c] = static_cast<int8_t>(v); }

private:
    int dim_;
    std::vector<int8_t> e_;
};

/// i.i.d. uniform +-1 entries.
SignMatrix sample_matrix(int d, TrialRng& rng);

/// Entry (r, c) is fixed by bit r*d+c of the index; drives exhaustive
/// enumeration over all 2^(d*d) matrices.
SignMatrix matrix_from_index(int d, uint64_t index);

/// det(xI - M), exact, via the Faddeev-LeVerrier recurrence (all divisions in
/// the recurrence are exact in integer arithmetic). Monic of degree d;
/// constant coefficient (-1)^d det(M).
IntPolynomial characteristic_polynomial(const SignMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination; an independent
/// cross-check of the characteristic polynomial's constant term.
mpz_class determinant(const SignMatrix& m);

} // namespace polyred
