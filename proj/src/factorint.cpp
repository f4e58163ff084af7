#include "polyred/factorint.hpp"

#include "polyred/rng.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace polyred {

namespace {

// ---------------------------------------------------------------------------
// Small-prime table and integer factorization (divisor enumeration for the
// rational-root theorem).
// ---------------------------------------------------------------------------

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 1u << 16;
        std::vector<bool> sieve(limit, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j < limit; j += i)
                sieve[static_cast<size_t>(j)] = false;
        }
        return out;
    }();
    return primes;
}

bool is_prime_mpz(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard rho (Brent variant) for composite n with no factors < 2^16.
mpz_class pollard_rho(const mpz_class& n, uint64_t& salt) {
    for (;;) {
        TrialRng rng(0x706f6c6c61726400ULL ^ salt++, mpz_get_ui(n.get_mpz_t()));
        mpz_class c = 1 + mpz_class(rng.next()) % (n - 1);
        mpz_class x = 2, y = 2, d = 1, diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break; // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_integer(mpz_class n, std::map<mpz_class, int>& out) {
    assert(n > 0);
    for (uint32_t p : small_primes()) {
        if (n == 1) return;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            out[p] += 1;
        }
        if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    }
    if (n == 1) return;
    if (is_prime_mpz(n)) {
        out[n] += 1;
        return;
    }
    uint64_t salt = 0;
    mpz_class d = pollard_rho(n, salt);
    factor_integer(d, out);
    factor_integer(n / d, out);
}

// Positive divisors of |n|, unsorted. n must be nonzero.
std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a == 1) return {mpz_class(1)};
    std::map<mpz_class, int> pf;
    factor_integer(a, pf);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : pf) {
        const size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

// ---------------------------------------------------------------------------
// Arithmetic helpers over Z/mZ on IntPolynomial coefficients (Hensel stage).
// ---------------------------------------------------------------------------

IntPolynomial zmod_reduce(const IntPolynomial& f, const mpz_class& m) {
    std::vector<mpz_class> out(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i)
        mpz_mod(out[static_cast<size_t>(i)].get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
    return IntPolynomial(std::move(out));
}

IntPolynomial zmod_symmetric(const IntPolynomial& f, const mpz_class& m) {
    const mpz_class half = m / 2;
    std::vector<mpz_class> out(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class c;
        mpz_mod(c.get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
        out[static_cast<size_t>(i)] = std::move(c);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial zmod_mul(const IntPolynomial& a, const IntPolynomial& b, const mpz_class& m) {
    return zmod_reduce(a * b, m);
}

// Division by a monic divisor with all arithmetic mod m.
std::pair<IntPolynomial, IntPolynomial> zmod_divmod_monic(const IntPolynomial& f,
                                                          const IntPolynomial& h,
                                                          const mpz_class& m) {
    assert(h.leading() == 1);
    if (f.degree() < h.degree()) return {IntPolynomial{}, f};
    std::vector<mpz_class> rem(f.coeffs().begin(), f.coeffs().end());
    const int dd = h.degree();
    const int dq = f.degree() - dd;
    std::vector<mpz_class> quot(static_cast<size_t>(dq) + 1, mpz_class(0));
    for (int k = dq; k >= 0; --k) {
        mpz_class q = rem[static_cast<size_t>(k + dd)];
        if (q == 0) continue;
        for (int i = 0; i < dd; ++i) {
            mpz_class& r = rem[static_cast<size_t>(k + i)];
            r -= q * h.coeff(i);
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        rem[static_cast<size_t>(k + dd)] = 0;
        quot[static_cast<size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<size_t>(dd));
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

// f(a/b) * b^deg, exact. b == 1 degenerates to plain Horner.
mpz_class eval_homogeneous(const IntPolynomial& f, const mpz_class& a, const mpz_class& b) {
    if (b == 1) return f.evaluate(a);
    mpz_class acc = 0;
    mpz_class bp = 1;
    for (int i = f.degree(); i >= 0; --i) {
        acc *= a;
        if (f.coeff(i) != 0) acc += f.coeff(i) * bp;
        if (i > 0) bp *= b;
    }
    return acc;
}

// Small-coefficient polynomials with small integer root candidates can be
// evaluated in 128-bit arithmetic. Returns the coefficient vector when
// |p(r)| is guaranteed below 2^126 for every candidate |r| <= radius.
std::optional<std::vector<int64_t>> narrow_coeffs(const IntPolynomial& f, double radius) {
    double maxc = 0;
    std::vector<int64_t> c(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).fits_slong_p()) return std::nullopt;
        c[static_cast<size_t>(i)] = f.coeff(i).get_si();
        maxc = std::max(maxc, std::abs(static_cast<double>(c[static_cast<size_t>(i)])));
    }
    const double bits = std::log2(maxc + 1) + std::log2(f.degree() + 1.0) +
                        f.degree() * std::log2(radius + 2.0);
    if (bits >= 120.0) return std::nullopt;
    return c;
}

inline __int128 eval_i128(const std::vector<int64_t>& c, int64_t x) {
    __int128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<mpq_class> rational_roots_impl(const IntPolynomial& p) {
    std::vector<mpq_class> roots;
    IntPolynomial q = p;
    // x = 0
    int shift = 0;
    while (shift <= q.degree() && q.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        std::vector<mpz_class> c(q.coeffs().begin() + shift, q.coeffs().end());
        q = IntPolynomial(std::move(c));
    }
    if (q.degree() < 1) return roots;

    // Root magnitude bound: |a/b| <= 1 + max|c_i| / |lead|.
    mpz_class maxc = 0;
    for (const auto& c : q.coeffs()) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    const mpz_class lead_abs = abs(q.leading());
    const mpz_class bound_num = lead_abs + maxc; // |a|/b <= bound_num / lead_abs

    auto nums = positive_divisors(q.constant());
    auto dens = positive_divisors(q.leading());
    const double radius = mpq_class(bound_num, lead_abs).get_d();
    const auto narrow = narrow_coeffs(q, radius);
    mpz_class g;
    for (const auto& den : dens) {
        const bool fast = den == 1 && narrow.has_value();
        for (const auto& num : nums) {
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            if (num * lead_abs > den * bound_num) continue;
            if (fast) {
                const int64_t nv = num.get_si();
                if (eval_i128(*narrow, nv) == 0) roots.emplace_back(num, den);
                if (eval_i128(*narrow, -nv) == 0) roots.emplace_back(-mpz_class(num), den);
            } else {
                if (eval_homogeneous(q, num, den) == 0) roots.emplace_back(num, den);
                mpz_class neg = -num;
                if (eval_homogeneous(q, neg, den) == 0) roots.emplace_back(neg, den);
            }
        }
    }
    for (auto& r : roots) r.canonicalize();
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Degree sieve
// ---------------------------------------------------------------------------

// Subset sums of a degree multiset as a bitmap over 0..total.
std::vector<char> subset_sums(const std::vector<int>& degs, int total) {
    std::vector<char> reach(static_cast<size_t>(total) + 1, 0);
    reach[0] = 1;
    for (int d : degs)
        for (int s = total - d; s >= 0; --s)
            if (reach[static_cast<size_t>(s)]) reach[static_cast<size_t>(s + d)] = 1;
    return reach;
}

// Usability of a prime for sieve/Zassenhaus: keeps the degree and leaves the
// reduction squarefree.
bool prime_usable(const IntPolynomial& f, uint64_t prime) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), prime)) return false;
    ModPoly fb = ModPoly::reduce(f, prime);
    return mod_gcd(fb, fb.derivative()).degree() == 0;
}

// Returns the factor degree multiset when the prime is usable.
std::optional<std::vector<int>> try_sieve_prime(const IntPolynomial& f, uint64_t prime) {
    if (!prime_usable(f, prime)) return std::nullopt;
    return mod_factor_degrees(ModPoly::reduce(f, prime).monic());
}

// Squarefreeness over Q, settled by a cheap one-prime certificate when
// possible and by an exact gcd otherwise.
bool is_squarefree_z(const IntPolynomial& f) {
    const auto& primes = small_primes();
    for (size_t idx = 1; idx < 26; ++idx)
        if (prime_usable(f, primes[idx])) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, two-factor steps on a binary split of the
// mod-p factor list)
// ---------------------------------------------------------------------------

struct HenselPair {
    IntPolynomial g, h, s, t; // f == g*h, s*g + t*h == 1 (mod m); h monic
};

// Extended Euclid over F_p for coprime a, b: s*a + t*b == 1.
std::pair<ModPoly, ModPoly> mod_ext_gcd_coprime(const ModPoly& a, const ModPoly& b) {
    const uint64_t p = a.prime();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(p), s1(p);
    ModPoly t0(p), t1 = ModPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        ModPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    assert(r0.degree() == 0 && !r0.is_zero());
    const uint64_t inv = r0.p_inv(r0.leading());
    return {s0 * inv, t0 * inv};
}

// One quadratic Hensel step: from modulus m to `m2` (any target in (m, m^2]),
// updating the pair and its Bezout cofactors.
void hensel_step(HenselPair& P, const IntPolynomial& f, const mpz_class& m2) {
    const IntPolynomial one{{1}};

    IntPolynomial e = zmod_reduce(f - P.g * P.h, m2);
    auto [q, r] = zmod_divmod_monic(zmod_mul(P.s, e, m2), P.h, m2);
    IntPolynomial gstar = zmod_reduce(P.g + P.t * e + q * P.g, m2);
    IntPolynomial hstar = zmod_reduce(P.h + r, m2);

    IntPolynomial b = zmod_reduce(P.s * gstar + P.t * hstar - one, m2);
    auto [c, d] = zmod_divmod_monic(zmod_mul(P.s, b, m2), hstar, m2);
    IntPolynomial sstar = zmod_reduce(P.s - d, m2);
    IntPolynomial tstar = zmod_reduce(P.t - P.t * b - c * gstar, m2);

    P.g = std::move(gstar);
    P.h = std::move(hstar);
    P.s = std::move(sstar);
    P.t = std::move(tstar);
}

// Lift the factorization target == lead(target) * prod(leaves) (mod p) to the
// modulus M (a power of p on the squaring ladder), appending the monic lifted
// factors mod M.
void lift_factors(const IntPolynomial& target, std::span<const ModPoly> leaves, uint64_t p,
                  const mpz_class& M, std::vector<IntPolynomial>& out) {
    if (leaves.size() == 1) {
        mpz_class lc;
        mpz_mod(lc.get_mpz_t(), target.leading().get_mpz_t(), M.get_mpz_t());
        if (lc == 1) {
            out.push_back(zmod_reduce(target, M));
        } else {
            mpz_class inv;
            int ok = mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
            assert(ok);
            (void)ok;
            out.push_back(zmod_reduce(target * inv, M));
        }
        return;
    }
    const size_t mid = leaves.size() / 2;
    const uint64_t lc_p = ModPoly::reduce(target, p).leading();

    ModPoly ubar = ModPoly::one(p) * lc_p;
    for (size_t i = 0; i < mid; ++i) ubar = ubar * leaves[i];
    ModPoly vbar = ModPoly::one(p);
    for (size_t i = mid; i < leaves.size(); ++i) vbar = vbar * leaves[i];

    auto [sbar, tbar] = mod_ext_gcd_coprime(ubar, vbar);
    HenselPair P{ubar.lift(), vbar.lift(), sbar.lift(), tbar.lift()};

    mpz_class m = static_cast<unsigned long>(p);
    while (m < M) {
        mpz_class next = m * m;
        if (next > M) next = M;
        hensel_step(P, target, next);
        m = std::move(next);
    }
    lift_factors(P.g, leaves.subspan(0, mid), p, M, out);
    lift_factors(P.h, leaves.subspan(mid), p, M, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination
// ---------------------------------------------------------------------------

// Factor a primitive squarefree polynomial with positive leading coefficient
// and nonzero constant term, degree >= 2, given a usable odd prime and its
// monic mod-p factors (>= 2 of them). Appends primitive irreducible factors.
// When stop_after_first is set, returns after the first factor found (used by
// the reducibility early exit).
//
// Only subsets of total degree <= deg(f)/2 are tried: every reducible f has
// an irreducible factor that small, and whatever remains at the end is
// irreducible. The Mignotte exponent shrinks accordingly. Subsets run over
// every cardinality below the leaf count (a low-degree factor may need many
// leaves, e.g. a quadratic splitting into two linears mod p).
void zassenhaus(IntPolynomial f, uint64_t p, std::vector<ModPoly> modfactors,
                std::vector<IntPolynomial>& out, bool stop_after_first) {
    mpz_class norm2 = f.l2_norm_squared();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    ++root;
    mpz_class bound = root * abs(f.leading());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(f.degree() / 2));
    const mpz_class twice_bound = 2 * bound;
    mpz_class M = static_cast<unsigned long>(p);
    while (M <= twice_bound) M *= static_cast<unsigned long>(p);

    std::vector<IntPolynomial> lifted;
    lift_factors(f, modfactors, p, M, lifted);

    std::vector<size_t> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    size_t cardinality = 1;
    while (cardinality < alive.size()) {
        // Lexicographic combinations of `cardinality` indices into `alive`.
        std::vector<size_t> pick(cardinality);
        for (size_t i = 0; i < cardinality; ++i) pick[i] = i;
        bool removed = false;
        for (;;) {
            int degree_sum = 0;
            for (size_t i : pick) degree_sum += lifted[alive[i]].degree();

            bool divides = false;
            if (2 * degree_sum <= f.degree()) {
                // Candidate: lead(f) * prod of picked factors, symmetric mod M.
                IntPolynomial cand = IntPolynomial::monomial(0, f.leading());
                for (size_t i : pick) cand = zmod_mul(cand, lifted[alive[i]], M);
                cand = zmod_symmetric(cand, M);

                const mpz_class tc = cand.constant();
                if (tc != 0 && mpz_divisible_p(mpz_class(f.leading() * f.constant()).get_mpz_t(),
                                               tc.get_mpz_t())) {
                    auto [cont, prim] = cand.content_and_primitive();
                    if (auto quot = f.divide_exact(prim)) {
                        out.push_back(std::move(prim));
                        if (stop_after_first) return;
                        // The quotient of one primitive positive-lead
                        // polynomial by another stays primitive, positive lead.
                        f = std::move(*quot);
                        std::vector<size_t> next_alive;
                        for (size_t i = 0; i < alive.size(); ++i)
                            if (std::find(pick.begin(), pick.end(), i) == pick.end())
                                next_alive.push_back(alive[i]);
                        alive = std::move(next_alive);
                        divides = true;
                    }
                }
            }
            if (divides) {
                removed = true;
                break; // restart combinations at this cardinality
            }
            // next combination
            size_t i = cardinality;
            while (i-- > 0) {
                if (pick[i] != i + alive.size() - cardinality) {
                    ++pick[i];
                    for (size_t j = i + 1; j < cardinality; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) goto combinations_done;
            }
        }
    combinations_done:
        if (!removed) ++cardinality;
        if (alive.empty()) break;
    }
    if (f.degree() >= 1) out.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Pipeline pieces shared by factor() and is_reducible()
// ---------------------------------------------------------------------------

constexpr int kSievePrimeCount = 3;
constexpr uint64_t kPrimeScanLimit = 5000; // count of odd primes tried before giving up

struct SievePlan {
    std::vector<uint64_t> primes;                // usable primes, ascending
    std::vector<std::vector<int>> degree_lists;  // factor degrees per prime
    bool squarefree_known = false;               // proven squarefree along the way
    size_t resume_index = 1;                     // where extend_sieve continues scanning
};

// Scan odd primes for up to kSievePrimeCount usable ones. For input that is
// not squarefree no prime is ever usable, so after a while we settle the
// squarefree question exactly and (if squarefree) keep scanning.
SievePlan plan_sieve(const IntPolynomial& f) {
    SievePlan plan;
    const auto& primes = small_primes();
    size_t scanned = 0;
    bool squarefree_settled = false;
    size_t idx = 1; // primes[1] == 3
    for (; idx < primes.size() && plan.primes.size() < kSievePrimeCount; ++idx) {
        const uint64_t pr = primes[idx];
        if (++scanned > kPrimeScanLimit) break;
        if (auto degs = try_sieve_prime(f, pr)) {
            plan.primes.push_back(pr);
            plan.degree_lists.push_back(std::move(*degs));
            plan.squarefree_known = true; // gcd(f, f') == 1 mod pr certifies it
            squarefree_settled = true;
        } else if (!squarefree_settled && scanned >= 25) {
            IntPolynomial g = poly_gcd(f, f.derivative());
            squarefree_settled = true;
            if (g.degree() >= 1) return plan; // not squarefree; no usable primes exist
        }
    }
    plan.resume_index = idx;
    if (plan.primes.empty() && !plan.squarefree_known) {
        IntPolynomial g = poly_gcd(f, f.derivative());
        if (g.degree() == 0) plan.squarefree_known = true;
    }
    return plan;
}

void intersect_with_degrees(std::set<int>& allowed, const std::vector<int>& degs, int degree) {
    const auto reach = subset_sums(degs, degree);
    for (auto it = allowed.begin(); it != allowed.end();) {
        if (!reach[static_cast<size_t>(*it)])
            it = allowed.erase(it);
        else
            ++it;
    }
}

bool sieve_certifies_irreducible(const std::set<int>& s, int degree) {
    return s.size() == 2 && s.count(0) == 1 && s.count(degree) == 1;
}

// Before lifting, examine up to `extra` more usable primes: each one shrinks
// the allowed degree set (possibly certifying irreducibility) and is a
// candidate lifting prime. Returns true when f became certified irreducible.
bool extend_sieve(SievePlan& plan, const IntPolynomial& f, std::set<int>& allowed, int extra) {
    const auto& primes = small_primes();
    int found = 0;
    size_t scanned = 0;
    while (found < extra && plan.resume_index < primes.size() &&
           ++scanned <= kPrimeScanLimit) {
        const uint64_t pr = primes[plan.resume_index++];
        auto degs = try_sieve_prime(f, pr);
        if (!degs) continue;
        intersect_with_degrees(allowed, *degs, f.degree());
        plan.primes.push_back(pr);
        plan.degree_lists.push_back(std::move(*degs));
        ++found;
        if (sieve_certifies_irreducible(allowed, f.degree())) return true;
    }
    return false;
}

std::set<int> sieve_intersection(const SievePlan& plan, int degree) {
    std::vector<char> acc(static_cast<size_t>(degree) + 1, 1);
    for (const auto& degs : plan.degree_lists) {
        auto reach = subset_sums(degs, degree);
        for (int i = 0; i <= degree; ++i)
            acc[static_cast<size_t>(i)] = acc[static_cast<size_t>(i)] && reach[static_cast<size_t>(i)];
    }
    std::set<int> out;
    for (int i = 0; i <= degree; ++i)
        if (acc[static_cast<size_t>(i)]) out.insert(i);
    return out;
}

// Best recombination prime: fewest mod-p factors, ties to the smaller prime.
size_t best_prime_index(const SievePlan& plan) {
    size_t best = 0;
    for (size_t i = 1; i < plan.primes.size(); ++i)
        if (plan.degree_lists[i].size() < plan.degree_lists[best].size()) best = i;
    return best;
}

// Yun's squarefree decomposition for a primitive polynomial with positive
// leading coefficient. Returns (squarefree part, multiplicity) pairs.
std::vector<std::pair<IntPolynomial, int>> yun_squarefree(const IntPolynomial& f) {
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPolynomial b = *f.divide_exact(g);
    IntPolynomial c = *f.derivative().divide_exact(g);
    IntPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPolynomial h = poly_gcd(b, d);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = *b.divide_exact(h);
        c = *d.divide_exact(h);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntPolynomial strip_low_zeros(const IntPolynomial& f, int& zeros) {
    zeros = 0;
    while (zeros <= f.degree() && f.coeff(zeros) == 0) ++zeros;
    if (zeros == 0) return f;
    std::vector<mpz_class> c(f.coeffs().begin() + zeros, f.coeffs().end());
    return IntPolynomial(std::move(c));
}

IntPolynomial make_linear(const mpq_class& root) {
    // b*x - a for root a/b in lowest terms, positive leading coefficient.
    std::vector<mpz_class> c(2);
    c[0] = -root.get_num();
    c[1] = root.get_den();
    return IntPolynomial(std::move(c));
}

// Factor a primitive squarefree polynomial with positive leading coefficient
// and nonzero constant term. Appends irreducible primitive factors and bumps
// `path` to the deepest stage used.
void factor_squarefree(IntPolynomial q, std::vector<std::pair<IntPolynomial, int>>& out,
                       int multiplicity, DecisionPath& path) {
    auto bump = [&path](DecisionPath p) {
        if (static_cast<int>(p) > static_cast<int>(path)) path = p;
    };
    if (q.degree() == 1) {
        out.emplace_back(std::move(q), multiplicity);
        return;
    }
    // Linear factors from rational roots (simple roots: q is squarefree).
    for (const mpq_class& r : rational_roots_impl(q)) {
        IntPolynomial lin = make_linear(r);
        q = *q.divide_exact(lin);
        out.emplace_back(std::move(lin), multiplicity);
    }
    if (q.degree() <= 0) return;
    if (q.degree() <= 3) {
        // Degree 2 or 3 without a rational root is irreducible; degree 1 is a factor.
        out.emplace_back(std::move(q), multiplicity);
        return;
    }

    SievePlan plan = plan_sieve(q);
    if (plan.primes.empty())
        throw std::logic_error("no usable sieve prime found for squarefree polynomial");
    bump(DecisionPath::DegreeSieve);
    auto allowed = sieve_intersection(plan, q.degree());
    // widening the prime set often certifies irreducibility far more cheaply
    // than a Hensel lift would
    if (sieve_certifies_irreducible(allowed, q.degree()) ||
        extend_sieve(plan, q, allowed, 5)) {
        out.emplace_back(std::move(q), multiplicity);
        return;
    }

    bump(DecisionPath::Zassenhaus);
    const size_t bi = best_prime_index(plan);
    const uint64_t pr = plan.primes[bi];
    auto modfs = mod_factor(ModPoly::reduce(q, pr).monic(), q.hash() ^ pr);
    std::vector<ModPoly> leaves;
    leaves.reserve(modfs.size());
    for (auto& mf : modfs) {
        assert(mf.multiplicity == 1);
        leaves.push_back(std::move(mf.factor));
    }
    std::vector<IntPolynomial> found;
    zassenhaus(std::move(q), pr, std::move(leaves), found, false);
    for (auto& g : found) out.emplace_back(std::move(g), multiplicity);
}

} // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

std::string to_string(DecisionPath path) {
    switch (path) {
        case DecisionPath::RationalRoot: return "rational-root";
        case DecisionPath::SquarefreeGcd: return "squarefree-gcd";
        case DecisionPath::DegreeSieve: return "degree-sieve";
        case DecisionPath::Zassenhaus: return "zassenhaus";
    }
    return "?";
}

mpz_class factor_coefficient_bound(const IntPolynomial& p) {
    mpz_class norm2 = p.l2_norm_squared();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    if (root * root < norm2) ++root;
    mpz_class out = root * abs(p.leading());
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(p.degree()));
    return out;
}

std::vector<mpq_class> rational_roots(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("rational_roots needs a polynomial of degree >= 1");
    return rational_roots_impl(p);
}

std::vector<ModFactor> factor_mod_p(const IntPolynomial& p, uint64_t prime) {
    if (prime < 2 || mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(prime)).get_mpz_t(), 40) == 0)
        throw std::invalid_argument("modulus " + std::to_string(prime) + " is not prime");
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("factor_mod_p needs degree >= 1");
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), prime))
        throw std::invalid_argument("prime " + std::to_string(prime) +
                                    " divides the leading coefficient");
    return mod_factor(ModPoly::reduce(p, prime), p.hash() ^ prime);
}

std::set<int> degree_sieve(const IntPolynomial& p, std::span<const uint64_t> primes) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("degree_sieve needs degree >= 1");
    std::set<int> out;
    if (primes.empty()) {
        for (int i = 0; i <= p.degree(); ++i) out.insert(i);
        return out;
    }
    SievePlan plan;
    for (uint64_t pr : primes) {
        if (pr < 2 ||
            mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(pr)).get_mpz_t(), 40) == 0)
            throw std::invalid_argument("modulus " + std::to_string(pr) + " is not prime");
        auto degs = try_sieve_prime(p, pr);
        if (!degs)
            throw std::invalid_argument("prime " + std::to_string(pr) +
                                        " is unusable for the degree sieve");
        plan.primes.push_back(pr);
        plan.degree_lists.push_back(std::move(*degs));
    }
    return sieve_intersection(plan, p.degree());
}

FactorReport factor(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("factor needs a polynomial of degree >= 1");
    FactorReport rep;
    rep.input_degree = p.degree();
    auto [content, prim] = p.content_and_primitive();
    if (prim.leading() < 0) {
        prim = -prim;
        content = -content;
    }
    rep.content = content;

    DecisionPath path = DecisionPath::RationalRoot;
    std::vector<std::pair<IntPolynomial, int>> factors;

    int zeros = 0;
    prim = strip_low_zeros(prim, zeros);
    if (zeros > 0) factors.emplace_back(IntPolynomial::monomial(1), zeros);

    if (prim.degree() >= 1) {
        if (is_squarefree_z(prim)) {
            factor_squarefree(std::move(prim), factors, 1, path);
        } else {
            path = DecisionPath::SquarefreeGcd;
            for (auto& [part, mult] : yun_squarefree(prim))
                factor_squarefree(std::move(part), factors, mult, path);
        }
    }

    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    rep.factors = std::move(factors);

    int total = 0;
    int mindeg = rep.input_degree;
    for (const auto& [g, m] : rep.factors) {
        total += m;
        mindeg = std::min(mindeg, g.degree());
    }
    rep.is_reducible = total >= 2;
    rep.min_factor_degree = mindeg;
    rep.decision_path = path;
    return rep;
}

bool is_reducible(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("is_reducible needs a polynomial of degree >= 1");
    if (p.degree() == 1) return false;

    auto [content, prim] = p.content_and_primitive();
    if (prim.leading() < 0) prim = -prim;

    // 1. Constant term zero: x divides.
    if (prim.constant() == 0) return true;

    // 2. Rational root: a linear factor.
    if (!rational_roots_impl(prim).empty()) return true;

    // 3. Squarefree check; a repeated factor at degree >= 2 means reducible.
    SievePlan plan = plan_sieve(prim);
    if (!plan.squarefree_known) return true; // plan_sieve proved a nontrivial gcd
    if (plan.primes.empty())
        throw std::logic_error("no usable sieve prime found for squarefree polynomial");

    // 4. Degree sieve certificate.
    auto allowed = sieve_intersection(plan, prim.degree());
    if (sieve_certifies_irreducible(allowed, prim.degree())) return false;
    if (extend_sieve(plan, prim, allowed, 5)) return false;

    // 5. Zassenhaus, stopping at the first factor.
    const size_t bi = best_prime_index(plan);
    const uint64_t pr = plan.primes[bi];
    auto modfs = mod_factor(ModPoly::reduce(prim, pr).monic(), prim.hash() ^ pr);
    std::vector<ModPoly> leaves;
    leaves.reserve(modfs.size());
    for (auto& mf : modfs) leaves.push_back(std::move(mf.factor));
    if (leaves.size() <= 1) return false;
    std::vector<IntPolynomial> found;
    const int degree = prim.degree();
    zassenhaus(std::move(prim), pr, std::move(leaves), found, true);
    return !found.empty() && found.front().degree() < degree;
}

} // namespace polyred
