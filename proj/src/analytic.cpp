#include "polyred/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace polyred {

namespace {

constexpr double kPi = 3.14159265358979323846;

mpq_class pow2_inverse(int e) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return {1, d};
}

mpq_class mpq_pow(const mpq_class& q, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(out.get_den_mpz_t(), mpq_denref(q.get_mpq_t()), e);
    out.canonicalize();
    return out;
}

long double zeta_long_double(int s) {
    constexpr int N = 400;
    long double sum = 0.0L;
    for (int n = N - 1; n >= 1; --n)
        sum += powl(static_cast<long double>(n), -static_cast<long double>(s));
    const long double nl = N;
    const long double sl = s;
    // Euler-Maclaurin tail from N: integral + endpoint + two corrections.
    long double tail = powl(nl, 1.0L - sl) / (sl - 1.0L);
    tail += 0.5L * powl(nl, -sl);
    tail += sl / 12.0L * powl(nl, -sl - 1.0L);
    tail -= sl * (sl + 1.0L) * (sl + 2.0L) / 720.0L * powl(nl, -sl - 3.0L);
    return sum + tail;
}

} // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    if (k > n) return out; // 0
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

AnalyticValue zero_one_linear_prob(int d) {
    if (d <= 1) throw std::domain_error("zero_one_linear_prob needs d >= 2");
    const unsigned long ud = static_cast<unsigned long>(d);
    mpz_class count;
    if (d % 2 == 1)
        count = binomial(ud - 1, (ud - 1) / 2);
    else
        count = (d >= 4) ? binomial(ud - 1, ud / 2 - 2) : mpz_class(0);
    mpq_class prob = mpq_class(count) * pow2_inverse(d - 1);
    prob.canonicalize();
    return {"p1-linear", prob, prob.get_d(), false};
}

AnalyticValue zero_one_linear_main_term(int d) {
    if (d <= 1) throw std::domain_error("zero_one_linear_main_term needs d >= 2");
    return {"p1-main", std::nullopt, std::sqrt(2.0 / (kPi * d)), true};
}

Pm1Linear pm1_linear_counts(int d) {
    if (d < 1 || d % 2 == 0)
        throw std::domain_error("pm1_linear_counts: even-degree +-1 polynomials "
                                "cannot have a linear factor");
    const unsigned long ud = static_cast<unsigned long>(d);
    mpz_class count = binomial(ud + 1, (ud + 1) / 2);
    if (d % 4 == 3) {
        mpz_class c = binomial((ud + 1) / 2, (ud + 1) / 4);
        count -= c * c / 2;
    }
    mpq_class prob = mpq_class(count) * pow2_inverse(d);
    prob.canonicalize();
    const double main = 2.0 * std::sqrt(2.0 / (kPi * (d + 1))) - 4.0 / (kPi * (d + 1));
    return {std::move(count), std::move(prob), main};
}

AnalyticValue pm1_linear_prob(int d) {
    auto v = pm1_linear_counts(d);
    return {"pm1-linear", v.probability, v.probability.get_d(), false};
}

AnalyticValue pm1_linear_main_term(int d) {
    auto v = pm1_linear_counts(d);
    return {"pm1-main", std::nullopt, v.main_term, true};
}

mpq_class slab_volume(int n) {
    if (n < 1) throw std::domain_error("slab_volume needs n >= 1");
    const unsigned long un = static_cast<unsigned long>(n);
    // Map x_i = 2u_i - 1: the slab becomes (n-1)/2 <= sum u_i <= (n+1)/2 in the
    // unit cube, whose measure is an Irwin-Hall CDF difference:
    // F_n(t) = (1/n!) sum_k (-1)^k C(n,k) (t-k)^n for 0 <= t <= n.
    auto irwin_hall_scaled = [&](const mpq_class& t) {
        // returns n! * F_n(t)
        mpq_class acc = 0;
        for (unsigned long k = 0;; ++k) {
            mpq_class tk = t - static_cast<long>(k);
            if (tk <= 0 || k > un) break;
            mpq_class term = mpq_class(binomial(un, k)) * mpq_pow(tk, un);
            if (k % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    };
    const mpq_class hi(static_cast<long>(n) + 1, 2);
    const mpq_class lo(static_cast<long>(n) - 1, 2);
    mpq_class diff = irwin_hall_scaled(hi) - irwin_hall_scaled(lo);
    mpz_class fact, two_n;
    mpz_fac_ui(fact.get_mpz_t(), un);
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, un);
    mpq_class vol = diff * mpq_class(two_n, fact);
    vol.canonicalize();
    return vol;
}

AnalyticValue slab_volume_value(int n) {
    mpq_class v = slab_volume(n);
    return {"slab", v, v.get_d(), false};
}

AnalyticValue zeta_int(int s) {
    if (s <= 1) throw std::domain_error("zeta_int needs s >= 2");
    return {"zeta", std::nullopt, static_cast<double>(zeta_long_double(s)), false};
}

AnalyticValue chela_constant(int d) {
    if (d <= 2) throw std::domain_error("chela_constant needs d >= 3");
    const long double z = zeta_long_double(d - 1);
    const mpq_class kd = slab_volume(d - 1);
    mpq_class scaled = kd * pow2_inverse(d - 2);
    const long double value = 2.0L * z - 1.0L + static_cast<long double>(scaled.get_d());
    return {"chela", std::nullopt, static_cast<double>(value), false};
}

MatrixBound matrix_singularity_lower_bound(int d) {
    if (d <= 1) throw std::domain_error("matrix_singularity_lower_bound needs d >= 2");
    const mpq_class c2(binomial(static_cast<unsigned long>(d), 2));
    mpq_class main = 4 * c2 * pow2_inverse(d);
    mpq_class second = 2 * c2 * c2 * pow2_inverse(d) * pow2_inverse(d - 2);
    mpq_class prop5 = main - second;
    main.canonicalize();
    prop5.canonicalize();
    return {std::move(prop5), std::move(main)};
}

AnalyticValue matrix_bound_value(int d) {
    auto b = matrix_singularity_lower_bound(d);
    return {"matrix-bound", b.prop5, b.prop5.get_d(), true};
}

AnalyticValue matrix_bound_main_term(int d) {
    auto b = matrix_singularity_lower_bound(d);
    return {"matrix-main", b.main_term, b.main_term.get_d(), true};
}

} // namespace polyred
