#include "polyred/modpoly.hpp"

#include "polyred/rng.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace polyred {

namespace {

// Operands are already reduced and p < 2^31, so the product fits in uint64.
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return a * b % p;
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

ModPoly ModPoly::reduce(const IntPolynomial& f, uint64_t prime) {
    std::vector<uint64_t> c(static_cast<size_t>(f.degree() + 1));
    mpz_class t;
    for (int i = 0; i <= f.degree(); ++i) {
        const mpz_class& v = f.coeff(i);
        if (v.fits_slong_p()) {
            const long s = v.get_si() % static_cast<long>(prime);
            c[static_cast<size_t>(i)] =
                static_cast<uint64_t>(s < 0 ? s + static_cast<long>(prime) : s);
        } else {
            mpz_mod_ui(t.get_mpz_t(), v.get_mpz_t(), prime);
            c[static_cast<size_t>(i)] = t.get_ui();
        }
    }
    return ModPoly(prime, std::move(c));
}

uint64_t ModPoly::p_inv(uint64_t a) const {
    // p prime, a != 0 mod p
    return powmod_u64(a % p_, p_ - 2, p_);
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] = (out[i] + o.c_[i]) % p_;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] = (out[i] + p_ - o.c_[i]) % p_;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<uint64_t> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] = (out[i + j] + c_[i] * o.c_[j]) % p_;
    }
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator*(uint64_t s) const {
    s %= p_;
    std::vector<uint64_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = mulmod(c_[i], s, p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<uint64_t> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return *this * p_inv(leading());
}

uint64_t ModPoly::evaluate(uint64_t x) const {
    x %= p_;
    uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = (mulmod(acc, x, p_) + *it) % p_;
    return acc;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("mod-p division by zero polynomial");
    if (degree() < divisor.degree()) return {ModPoly(p_), *this};
    const uint64_t inv = p_inv(divisor.leading());
    std::vector<uint64_t> rem = c_;
    const int dd = divisor.degree();
    const int dq = degree() - dd;
    std::vector<uint64_t> quot(static_cast<size_t>(dq) + 1, 0);
    for (int k = dq; k >= 0; --k) {
        const uint64_t top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        const uint64_t q = mulmod(top, inv, p_);
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dd; ++i) {
            uint64_t& r = rem[static_cast<size_t>(k + i)];
            r = (r + p_ - mulmod(q, divisor.c_[static_cast<size_t>(i)], p_)) % p_;
        }
    }
    rem.resize(static_cast<size_t>(dd));
    return {ModPoly(p_, std::move(quot)), ModPoly(p_, std::move(rem))};
}

ModPoly ModPoly::mod(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("mod-p division by zero polynomial");
    if (degree() < divisor.degree()) return *this;
    const uint64_t inv = p_inv(divisor.leading());
    std::vector<uint64_t> rem = c_;
    const int dd = divisor.degree();
    for (int k = degree() - dd; k >= 0; --k) {
        const uint64_t top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        const uint64_t q = mulmod(top, inv, p_);
        for (int i = 0; i < dd; ++i) {
            uint64_t& r = rem[static_cast<size_t>(k + i)];
            r = (r + p_ - mulmod(q, divisor.c_[static_cast<size_t>(i)], p_)) % p_;
        }
        rem[static_cast<size_t>(k + dd)] = 0;
    }
    rem.resize(static_cast<size_t>(dd));
    return ModPoly(p_, std::move(rem));
}

IntPolynomial ModPoly::lift() const {
    std::vector<mpz_class> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = static_cast<unsigned long>(c_[i]);
    return IntPolynomial(std::move(out));
}

IntPolynomial ModPoly::lift_symmetric() const {
    std::vector<mpz_class> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] > p_ / 2)
            out[i] = -static_cast<long>(p_ - c_[i]);
        else
            out[i] = static_cast<unsigned long>(c_[i]);
    }
    return IntPolynomial(std::move(out));
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly mod_pow(const ModPoly& a, const mpz_class& e, const ModPoly& f) {
    ModPoly base = a.mod(f);
    ModPoly result = ModPoly::one(a.prime());
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = (result * result).mod(f);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = (result * base).mod(f);
    }
    return result;
}

namespace {

// Squarefree decomposition over F_p, handling p-th power parts via the
// Frobenius (x^p -> x on exponents). Returns (squarefree monic part, mult).
void squarefree_decompose(const ModPoly& f, int outer_mult, std::vector<std::pair<ModPoly, int>>& out) {
    const uint64_t p = f.prime();
    ModPoly fp = f.monic();
    ModPoly d = fp.derivative();
    if (d.is_zero()) {
        // f = g(x^p): contract exponents and recurse with multiplicity * p.
        std::vector<uint64_t> g((static_cast<size_t>(fp.degree()) / p) + 1, 0);
        for (int i = 0; i <= fp.degree(); i += static_cast<int>(p))
            g[static_cast<size_t>(i) / p] = fp.coeff(i);
        squarefree_decompose(ModPoly(p, std::move(g)), outer_mult * static_cast<int>(p), out);
        return;
    }
    ModPoly c = mod_gcd(fp, d);
    ModPoly w = fp.divmod(c).first; // product of squarefree factors
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = mod_gcd(w, c);
        ModPoly part = w.divmod(y).first; // factors with multiplicity exactly i
        if (part.degree() > 0) out.emplace_back(part.monic(), i * outer_mult);
        w = std::move(y);
        c = c.divmod(w).first;
        ++i;
    }
    if (c.degree() > 0)
        squarefree_decompose(c, outer_mult, out); // leftover is a p-th power
}

// Distinct-degree splitting of a squarefree monic f:
// returns (product of irreducible factors of degree k, k) pairs.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
    const uint64_t p = f.prime();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rest = f.monic();
    ModPoly h = ModPoly::x(p); // x^(p^i) mod rest, updated in place
    int k = 0;
    while (rest.degree() > 0) {
        ++k;
        if (2 * k > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = mod_pow(h, mpz_class(static_cast<unsigned long>(p)), rest);
        ModPoly g = mod_gcd((h - ModPoly::x(p)), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            rest = rest.divmod(g).first;
            h = h.mod(rest);
        }
    }
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree monic product of
// irreducibles all of degree k. Odd p uses the (p^k-1)/2 power map; p = 2
// uses the trace map over F_2.
void equal_degree(const ModPoly& f, int k, TrialRng& rng, std::vector<ModPoly>& out) {
    const uint64_t p = f.prime();
    if (f.degree() == k) {
        out.push_back(f.monic());
        return;
    }
    const int n = f.degree();
    ModPoly splitter(p);
    while (true) {
        // Random nonconstant a of degree < n.
        std::vector<uint64_t> ac(static_cast<size_t>(n));
        for (auto& c : ac) c = rng.below(p);
        ModPoly a(p, std::move(ac));
        if (a.degree() < 1) continue;

        ModPoly g = mod_gcd(a, f);
        if (g.degree() > 0 && g.degree() < n) {
            splitter = g;
            break;
        }
        ModPoly b(p);
        if (p == 2) {
            // Trace map: a + a^2 + a^4 + ... + a^(2^(k-1)) mod f.
            ModPoly t = a;
            ModPoly acc = a;
            for (int i = 1; i < k; ++i) {
                t = (t * t).mod(f);
                acc = acc + t;
            }
            b = acc;
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(k));
            e = (e - 1) / 2;
            b = mod_pow(a, e, f) - ModPoly::one(p);
        }
        g = mod_gcd(b, f);
        if (g.degree() > 0 && g.degree() < n) {
            splitter = g;
            break;
        }
    }
    equal_degree(splitter, k, rng, out);
    equal_degree(f.divmod(splitter).first, k, rng, out);
}

bool mod_poly_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

} // namespace

std::vector<ModFactor> mod_factor(const ModPoly& f, uint64_t seed) {
    if (f.degree() < 1)
        throw std::domain_error("mod-p factorization needs degree >= 1");
    TrialRng rng(seed, f.prime());
    std::vector<std::pair<ModPoly, int>> squarefree;
    squarefree_decompose(f, 1, squarefree);

    std::vector<ModFactor> factors;
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, k] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            equal_degree(prod, k, rng, irr);
            for (auto& g : irr) factors.push_back({std::move(g), mult});
        }
    }
    std::sort(factors.begin(), factors.end(), [](const ModFactor& a, const ModFactor& b) {
        return mod_poly_less(a.factor, b.factor);
    });
    return factors;
}

std::vector<int> mod_factor_degrees(const ModPoly& f) {
    std::vector<int> degs;
    for (const auto& [prod, k] : distinct_degree(f.monic()))
        for (int i = 0; i < prod.degree() / k; ++i) degs.push_back(k);
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace polyred
