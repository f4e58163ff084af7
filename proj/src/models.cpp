#include "polyred/models.hpp"

#include "polyred/charpoly.hpp"

#include <array>
#include <stdexcept>

namespace polyred {

namespace {

struct FamilyInfo {
    ModelFamily family;
    const char* name;
    bool needs_k;
};

constexpr std::array<FamilyInfo, 8> kFamilies{{
    {ModelFamily::ZeroOneFixedEnds, "z1", false},
    {ModelFamily::ZeroOneFreeConstant, "z1-free", false},
    {ModelFamily::PlusMinusOne, "pm1", false},
    {ModelFamily::MonicUniformSym, "monic-sym", true},
    {ModelFamily::MonicUniformNonneg, "monic-nonneg", true},
    {ModelFamily::NonMonicUniform, "nonmonic", true},
    {ModelFamily::MonicBinomial, "binomial", true},
    {ModelFamily::CharPolyPM1, "charpm1", false},
}};

const FamilyInfo& info_for(ModelFamily f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi;
    throw std::logic_error("unknown model family");
}

int parse_positive_int(std::string_view s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("missing ") + what);
    long v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(s) + "'");
        v = v * 10 + (ch - '0');
        if (v > 1'000'000'000L) throw std::invalid_argument(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

} // namespace

std::string family_name(ModelFamily family) { return info_for(family).name; }

bool ModelSpec::needs_support() const { return info_for(family).needs_k; }

ModelSpec ModelSpec::parse(std::string_view text) {
    const size_t c1 = text.find(':');
    if (c1 == std::string_view::npos)
        throw std::invalid_argument("model spec needs family:degree[:K]");
    const std::string_view fam = text.substr(0, c1);
    std::string_view rest = text.substr(c1 + 1);
    const size_t c2 = rest.find(':');

    ModelSpec spec;
    bool found = false;
    for (const auto& fi : kFamilies) {
        if (fam == fi.name) {
            spec.family = fi.family;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument("unknown model family: '" + std::string(fam) + "'");

    if (c2 == std::string_view::npos) {
        spec.degree = parse_positive_int(rest, "degree");
    } else {
        spec.degree = parse_positive_int(rest.substr(0, c2), "degree");
        spec.support = parse_positive_int(rest.substr(c2 + 1), "K");
    }
    spec.validate();
    return spec;
}

std::string ModelSpec::to_text() const {
    std::string out = family_name(family);
    out += ':' + std::to_string(degree);
    if (needs_support()) out += ':' + std::to_string(support);
    return out;
}

void ModelSpec::validate() const {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (needs_support()) {
        if (support < 1) throw std::invalid_argument("family " + family_name(family) + " needs K >= 1");
    } else if (support != 0) {
        throw std::invalid_argument("family " + family_name(family) + " takes no K");
    }
}

IntPolynomial sample(const ModelSpec& spec, TrialRng& rng) {
    const int d = spec.degree;
    const long K = spec.support;
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    switch (spec.family) {
        case ModelFamily::ZeroOneFixedEnds:
            c[0] = 1;
            for (int i = 1; i < d; ++i) c[static_cast<size_t>(i)] = rng.coin() ? 1 : 0;
            c[static_cast<size_t>(d)] = 1;
            break;
        case ModelFamily::ZeroOneFreeConstant:
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rng.coin() ? 1 : 0;
            c[static_cast<size_t>(d)] = 1;
            break;
        case ModelFamily::PlusMinusOne:
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rng.coin() ? 1 : -1;
            c[static_cast<size_t>(d)] = 1;
            break;
        case ModelFamily::MonicUniformSym:
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rng.uniform_int(-K, K);
            c[static_cast<size_t>(d)] = 1;
            break;
        case ModelFamily::MonicUniformNonneg:
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rng.uniform_int(0, K);
            c[static_cast<size_t>(d)] = 1;
            break;
        case ModelFamily::NonMonicUniform: {
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = rng.uniform_int(-K, K);
            long lead = 0;
            while (lead == 0) lead = rng.uniform_int(-K, K);
            c[static_cast<size_t>(d)] = lead;
            break;
        }
        case ModelFamily::MonicBinomial: {
            for (int i = 0; i < d; ++i) {
                long v = 0;
                for (long j = 0; j < K; ++j)
                    if (rng.one_in(static_cast<uint64_t>(K))) ++v;
                c[static_cast<size_t>(i)] = v;
            }
            c[static_cast<size_t>(d)] = 1;
            break;
        }
        case ModelFamily::CharPolyPM1:
            return characteristic_polynomial(sample_matrix(d, rng));
    }
    return IntPolynomial(std::move(c));
}

mpz_class support_size(const ModelSpec& spec) {
    const unsigned long d = static_cast<unsigned long>(spec.degree);
    const unsigned long K = static_cast<unsigned long>(spec.support);
    mpz_class n;
    switch (spec.family) {
        case ModelFamily::ZeroOneFixedEnds:
            mpz_ui_pow_ui(n.get_mpz_t(), 2, d - 1);
            break;
        case ModelFamily::ZeroOneFreeConstant:
        case ModelFamily::PlusMinusOne:
            mpz_ui_pow_ui(n.get_mpz_t(), 2, d);
            break;
        case ModelFamily::MonicUniformSym:
            mpz_ui_pow_ui(n.get_mpz_t(), 2 * K + 1, d);
            break;
        case ModelFamily::MonicUniformNonneg:
        case ModelFamily::MonicBinomial:
            mpz_ui_pow_ui(n.get_mpz_t(), K + 1, d);
            break;
        case ModelFamily::NonMonicUniform:
            mpz_ui_pow_ui(n.get_mpz_t(), 2 * K + 1, d);
            n *= 2 * K;
            break;
        case ModelFamily::CharPolyPM1:
            mpz_ui_pow_ui(n.get_mpz_t(), 2, d * d);
            break;
    }
    return n;
}

namespace {

// Decodes the support element at `idx`, lexicographic in the coefficient
// sequence (constant term first; for CharPolyPM1, row-major matrix entries).
IntPolynomial decode_index(const ModelSpec& spec, uint64_t idx) {
    const int d = spec.degree;
    const long K = spec.support;
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    auto digits_msb_first = [&](int count, uint64_t base, int offset) {
        // fills c[offset .. offset+count) with idx digits, c[offset] most significant
        for (int i = count - 1; i >= 0; --i) {
            c[static_cast<size_t>(offset + i)] = static_cast<long>(idx % base);
            idx /= base;
        }
    };
    switch (spec.family) {
        case ModelFamily::ZeroOneFixedEnds:
            c[0] = 1;
            c[static_cast<size_t>(d)] = 1;
            digits_msb_first(d - 1, 2, 1);
            break;
        case ModelFamily::ZeroOneFreeConstant:
            c[static_cast<size_t>(d)] = 1;
            digits_msb_first(d, 2, 0);
            break;
        case ModelFamily::PlusMinusOne:
            c[static_cast<size_t>(d)] = 1;
            digits_msb_first(d, 2, 0);
            for (int i = 0; i < d; ++i)
                if (c[static_cast<size_t>(i)] == 0) c[static_cast<size_t>(i)] = -1;
            break;
        case ModelFamily::MonicUniformSym:
            c[static_cast<size_t>(d)] = 1;
            digits_msb_first(d, static_cast<uint64_t>(2 * K + 1), 0);
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] -= K;
            break;
        case ModelFamily::MonicUniformNonneg:
        case ModelFamily::MonicBinomial:
            c[static_cast<size_t>(d)] = 1;
            digits_msb_first(d, static_cast<uint64_t>(K + 1), 0);
            break;
        case ModelFamily::NonMonicUniform: {
            // lead digit is least significant so the order is lex on (a_0..a_d)
            const long t = static_cast<long>(idx % static_cast<uint64_t>(2 * K));
            idx /= static_cast<uint64_t>(2 * K);
            c[static_cast<size_t>(d)] = t < K ? t - K : t - K + 1;
            digits_msb_first(d, static_cast<uint64_t>(2 * K + 1), 0);
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] -= K;
            break;
        }
        case ModelFamily::CharPolyPM1:
            return characteristic_polynomial(matrix_from_index(d, idx));
    }
    return IntPolynomial(std::move(c));
}

// Per-coefficient-value Bin(K, 1/K) weights: w[v] = C(K,v) (K-1)^(K-v) / K^K.
std::vector<mpq_class> binomial_weights(long K) {
    std::vector<mpq_class> w(static_cast<size_t>(K) + 1);
    mpz_class kk;
    mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(K), static_cast<unsigned long>(K));
    for (long v = 0; v <= K; ++v) {
        mpz_class bin, pw;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(K), static_cast<unsigned long>(v));
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(K - 1),
                      static_cast<unsigned long>(K - v));
        w[static_cast<size_t>(v)] = mpq_class(bin * pw, kk);
        w[static_cast<size_t>(v)].canonicalize();
    }
    return w;
}

} // namespace

void enumerate_range(const ModelSpec& spec, uint64_t begin, uint64_t end,
                     const std::function<void(const IntPolynomial&, const mpq_class&)>& sink) {
    spec.validate();
    mpq_class uniform_weight(1);
    uniform_weight /= mpq_class(support_size(spec));
    std::vector<mpq_class> bw;
    if (spec.family == ModelFamily::MonicBinomial) bw = binomial_weights(spec.support);

    for (uint64_t idx = begin; idx < end; ++idx) {
        IntPolynomial poly = decode_index(spec, idx);
        if (spec.family == ModelFamily::MonicBinomial) {
            mpq_class w(1);
            for (int i = 0; i < spec.degree; ++i)
                w *= bw[poly.coeff(i).get_ui()];
            sink(poly, w);
        } else {
            sink(poly, uniform_weight);
        }
    }
}

void enumerate(const ModelSpec& spec,
               const std::function<void(const IntPolynomial&, const mpq_class&)>& sink,
               uint64_t cap) {
    spec.validate();
    const mpz_class n = support_size(spec);
    if (n > cap)
        throw std::length_error("support size " + n.get_str() + " exceeds enumeration cap " +
                                std::to_string(cap));
    enumerate_range(spec, 0, n.get_ui(), sink);
}

int lowest_possible_factor_degree(const ModelSpec& spec) {
    spec.validate();
    if (spec.family == ModelFamily::PlusMinusOne && spec.degree % 2 == 0) return 2;
    return 1;
}

mpq_class baseline_event_probability(const ModelSpec& spec) {
    spec.validate();
    const long K = spec.support;
    switch (spec.family) {
        case ModelFamily::ZeroOneFreeConstant:
            return {1, 2};
        case ModelFamily::MonicUniformSym:
        case ModelFamily::NonMonicUniform:
            return {1, 2 * K + 1};
        case ModelFamily::MonicUniformNonneg:
            return {1, K + 1};
        case ModelFamily::MonicBinomial: {
            mpz_class num, den;
            mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(K - 1),
                          static_cast<unsigned long>(K));
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(K),
                          static_cast<unsigned long>(K));
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        default:
            throw std::domain_error("family " + family_name(spec.family) +
                                    " has no constant-coefficient baseline; use the analytic module");
    }
}

} // namespace polyred
