#include "polyred/bigpoly.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace polyred {

namespace {

const mpz_class kZero = 0;

bool is_integer_token(std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
    return true;
}

} // namespace

IntPolynomial IntPolynomial::monomial(int degree, mpz_class c) {
    if (c == 0) return {};
    std::vector<mpz_class> v(static_cast<size_t>(degree) + 1, mpz_class(0));
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("polynomial text is empty");
    std::vector<mpz_class> coeffs;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        // tolerate surrounding spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!is_integer_token(tok))
            throw std::invalid_argument("bad coefficient token: '" + std::string(tok) + "'");
        coeffs.emplace_back(std::string(tok), 10);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
}

const mpz_class& IntPolynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const mpz_class& IntPolynomial::leading() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

const mpz_class& IntPolynomial::constant() const {
    return coeffs_.empty() ? kZero : coeffs_.front();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

std::pair<mpz_class, IntPolynomial> IntPolynomial::content_and_primitive() const {
    if (is_zero())
        throw std::domain_error("content of the zero polynomial is undefined");
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    std::vector<mpz_class> prim(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        prim[i] = coeffs_[i] / g;
    return {std::move(g), IntPolynomial(std::move(prim))};
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < divisor.degree()) return std::nullopt;

    // Long division over Z. If the division is exact the per-step leading
    // coefficient divisions are all exact too, so any failed step rules it out.
    std::vector<mpz_class> rem(coeffs_);
    const int dq = degree() - divisor.degree();
    const int dd = divisor.degree();
    std::vector<mpz_class> quot(static_cast<size_t>(dq) + 1, mpz_class(0));
    const mpz_class& lead = divisor.leading();

    for (int k = dq; k >= 0; --k) {
        mpz_class& top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        for (int i = 0; i < dd; ++i)
            rem[static_cast<size_t>(k + i)] -= q * divisor.coeffs_[static_cast<size_t>(i)];
        top = 0;
        quot[static_cast<size_t>(k)] = std::move(q);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
    if (c == 0) return {};
    std::vector<mpz_class> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::substitute_neg_x() const {
    std::vector<mpz_class> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<mpz_class> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::l2_norm_squared() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c * c;
    return s;
}

std::string IntPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

std::string IntPolynomial::to_pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(i);
        if (c == 0) continue;
        const bool first = out.empty();
        mpz_class a = abs(c);
        if (!first) out += (c < 0) ? " - " : " + ";
        else if (c < 0) out += "-";
        if (i == 0 || a != 1) out += a.get_str();
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

uint64_t IntPolynomial::hash() const {
    // FNV-1a over the decimal text; stability matters, speed does not.
    uint64_t h = 1469598103934665603ULL;
    for (char ch : to_text()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

namespace {

// Pseudo-remainder of f by g: the remainder of lead(g)^(deg f - deg g + 1) * f
// under division by g, computed without any coefficient division.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
    IntPolynomial r = f;
    int e = f.degree() - g.degree() + 1;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.degree() - g.degree(), r.leading());
        r = r * g.leading() - t * g;
        --e;
    }
    if (e > 0 && !r.is_zero()) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(e));
        r = r * scale;
    }
    return r;
}

} // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    auto normalize = [](const IntPolynomial& p) {
        auto [c, prim] = p.content_and_primitive();
        return prim.leading() < 0 ? -prim : prim;
    };
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    // Primitive PRS: contents are stripped every step, which keeps the
    // intermediate coefficients as small as any PRS variant allows.
    IntPolynomial f = normalize(a);
    IntPolynomial g = normalize(b);
    if (f.degree() < g.degree()) std::swap(f, g);

    while (true) {
        IntPolynomial r = pseudo_remainder(f, g);
        if (r.is_zero()) return normalize(g);
        if (r.degree() == 0) return IntPolynomial{{1}};
        f = std::move(g);
        g = normalize(r);
    }
}

} // namespace polyred
