#include "polyred/charpoly.hpp"

#include <stdexcept>

namespace polyred {

SignMatrix sample_matrix(int d, TrialRng& rng) {
    if (d < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    SignMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.set(r, c, rng.coin() ? 1 : -1);
    return m;
}

SignMatrix matrix_from_index(int d, uint64_t index) {
    SignMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const int bit = static_cast<int>((index >> (r * d + c)) & 1u);
            m.set(r, c, bit ? 1 : -1);
        }
    return m;
}

namespace {

// Dense big-integer matrix, row-major.
struct ZMatrix {
    int n;
    std::vector<mpz_class> a;
    explicit ZMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
    mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
};

ZMatrix multiply(const SignMatrix& s, const ZMatrix& b) {
    const int n = b.n;
    ZMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            mpz_class& acc = out.at(i, k);
            for (int j = 0; j < n; ++j) {
                if (s.entry(i, j) > 0)
                    acc += b.at(j, k);
                else
                    acc -= b.at(j, k);
            }
        }
    return out;
}

} // namespace

IntPolynomial characteristic_polynomial(const SignMatrix& m) {
    const int n = m.dim();
    // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr(M_1),
    // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = 1;

    ZMatrix mk(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mk.at(i, j) = m.entry(i, j);

    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += mk.at(i, i);
    coeffs[static_cast<size_t>(n - 1)] = -trace;

    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += coeffs[static_cast<size_t>(n - k + 1)];
        mk = multiply(m, mk);
        trace = 0;
        for (int i = 0; i < n; ++i) trace += mk.at(i, i);
        mpz_class c;
        mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[static_cast<size_t>(n - k)] = -c;
    }
    return IntPolynomial(std::move(coeffs));
}

mpz_class determinant(const SignMatrix& m) {
    const int n = m.dim();
    ZMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = m.entry(i, j);

    // Bareiss: fraction-free elimination; every division is exact.
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

} // namespace polyred
