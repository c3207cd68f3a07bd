#include "lat2red/gen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lat2red/oracle.hpp"

namespace lat2red {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ULL);
    splitmix64(state);
    return splitmix64(state);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& w : s_) w = splitmix64(state);
}

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + x % span;
}

BigInt Rng::uniform_below(const BigInt& bound) {
    if (sgn(bound) <= 0) throw precondition_error("uniform_below requires a positive bound");
    const std::size_t bits = bit_size(BigInt(bound - 1));
    if (bits == 0) return 0;
    const std::size_t words = (bits + 63) / 64;
    const unsigned top = static_cast<unsigned>(bits % 64);
    std::vector<std::uint64_t> buf(words);
    BigInt x;
    do {
        for (auto& w : buf) w = next();
        if (top != 0) buf[words - 1] &= (std::uint64_t{1} << top) - 1;
        mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    } while (x >= bound);
    return x;
}

BigInt Rng::uniform_range(const BigInt& lo, const BigInt& hi) {
    if (hi < lo) throw precondition_error("uniform_range requires lo <= hi");
    BigInt span = hi - lo + 1;
    return lo + uniform_below(span);
}

const char* to_string(Form f) {
    switch (f) {
        case Form::hnf: return "hnf";
        case Form::general: return "general";
        case Form::small: return "small";
    }
    return "?";
}

Form parse_form(std::string_view s) {
    if (s == "hnf") return Form::hnf;
    if (s == "general") return Form::general;
    if (s == "small") return Form::small;
    throw precondition_error("unknown form: " + std::string(s));
}

namespace {

BigInt pow10(std::size_t e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

BigInt uniform_digits(Rng& rng, std::size_t digits) {
    return rng.uniform_range(digits == 1 ? BigInt(1) : pow10(digits - 1), pow10(digits) - 1);
}

}  // namespace

Basis gen_hnf(const GenConfig& cfg) {
    if (cfg.n1_dec == 0 || cfg.n2_dec == 0) throw precondition_error("gen_hnf requires n1, n2 >= 1");
    if (cfg.n2_dec > cfg.n1_dec) throw precondition_error("gen_hnf requires n2 <= n1");
    Rng rng(cfg.seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BigInt a = uniform_digits(rng, cfg.n1_dec);
        BigInt b = uniform_digits(rng, cfg.n1_dec);
        if (a == b) continue;
        if (a < b) std::swap(a, b);
        BigInt c = uniform_digits(rng, cfg.n2_dec);
        if (c >= b) continue;
        if (rng.coin()) c = -c;
        return {{a, BigInt(0)}, {b, c}};
    }
    throw precondition_error("gen_hnf: no valid instance for these digit counts");
}

std::pair<BigInt, BigInt> convergents(const std::vector<BigInt>& quotients) {
    if (quotients.empty()) throw precondition_error("convergents of an empty list");
    if (sgn(quotients[0]) < 0) throw precondition_error("convergents: negative leading quotient");
    for (std::size_t i = 1; i < quotients.size(); ++i)
        if (sgn(quotients[i]) <= 0) throw precondition_error("convergents: quotients after the first must be >= 1");
    BigInt p0 = 1, p1 = quotients[0], q0 = 0, q1 = 1;
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        mpz_addmul(p0.get_mpz_t(), quotients[i].get_mpz_t(), p1.get_mpz_t());
        mpz_addmul(q0.get_mpz_t(), quotients[i].get_mpz_t(), q1.get_mpz_t());
        p0.swap(p1);
        q0.swap(q1);
    }
    return {p1, q1};
}

Basis basis_from_quotients(const std::vector<BigInt>& prefix, const std::vector<BigInt>& s1,
                           const std::vector<BigInt>& s2) {
    std::vector<BigInt> l1 = prefix, l2 = prefix;
    l1.insert(l1.end(), s1.begin(), s1.end());
    l2.insert(l2.end(), s2.begin(), s2.end());
    auto [a1, b1] = convergents(l1);
    auto [a2, b2] = convergents(l2);
    return {{a1, a2}, {b1, b2}};
}

Basis gen_general(const GenConfig& cfg) {
    if (cfg.n1_dec == 0) throw precondition_error("gen_general requires n1 >= 1");
    if (!(sgn(cfg.kappa_target) > 0 && cfg.kappa_target <= 1))
        throw precondition_error("gen_general requires kappa in (0, 1]");
    Rng rng(cfg.seed);
    const BigInt limit = pow10(cfg.n1_dec - 1);
    const double kappa = cfg.kappa_target.get_d();
    for (int attempt = 0; attempt < 16; ++attempt) {
        // Quotients uniform in [1, 10] until the numerator reaches n1 digits; the last one is >= 2 so the
        // list is the canonical expansion.
        std::vector<BigInt> q1;
        BigInt p0 = 0, p1 = 1;
        while (p1 < limit || q1.size() < 2) {
            BigInt q = static_cast<unsigned long>(rng.uniform(1, 10));
            mpz_addmul(p0.get_mpz_t(), q.get_mpz_t(), p1.get_mpz_t());
            p0.swap(p1);
            q1.push_back(std::move(q));
        }
        if (q1.back() < 2) q1.back() = static_cast<unsigned long>(rng.uniform(2, 10));
        const std::size_t len = q1.size();
        const std::size_t suffix =
            std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(kappa * static_cast<double>(len))), 1, len);
        const std::size_t plen = len - suffix;
        std::vector<BigInt> prefix(q1.begin(), q1.begin() + static_cast<std::ptrdiff_t>(plen));
        std::vector<BigInt> s1(q1.begin() + static_cast<std::ptrdiff_t>(plen), q1.end());
        std::vector<BigInt> s2(suffix);
        for (std::size_t i = 0; i < suffix; ++i) {
            const std::uint64_t lo = (i + 1 == suffix && (suffix > 1 || plen > 0)) ? 2 : 1;
            do s2[i] = static_cast<unsigned long>(rng.uniform(lo, 10));
            while (i == 0 && s2[0] == s1[0]);
        }
        Basis B = basis_from_quotients(prefix, s1, s2);
        if (sgn(det(B)) == 0) continue;
        mpq_class measured = measure_kappa(B);
        if (abs(measured - cfg.kappa_target) > mpq_class(1, 50)) continue;
        if (cfg.random_signs) {
            if (rng.coin()) {
                B.a.v1 = -B.a.v1;
                B.b.v1 = -B.b.v1;
            }
            if (rng.coin()) {
                B.a.v2 = -B.a.v2;
                B.b.v2 = -B.b.v2;
            }
        }
        return B;
    }
    throw precondition_error("gen_general: kappa target unreachable for this size");
}

Basis gen_small(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    int bitmax = std::max(1, cfg.small_bitmax);
    for (;;) {
        const BigInt hi = BigInt(1) << bitmax;
        const BigInt lo = -hi;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Basis B{{rng.uniform_range(lo, hi), rng.uniform_range(lo, hi)},
                    {rng.uniform_range(lo, hi), rng.uniform_range(lo, hi)}};
            if (sgn(det(B)) == 0) continue;
            auto zi = enumeration_bound(B, NormKind::linf);
            auto z2 = enumeration_bound(B, NormKind::l2);
            if (zi && z2 && *zi <= kSmallMaxBound && *z2 <= kSmallMaxBound) return B;
        }
        if (bitmax == 1) throw std::logic_error("gen_small: no feasible instance");
        --bitmax;
    }
}

Basis generate(const GenConfig& cfg) {
    switch (cfg.form) {
        case Form::hnf: return gen_hnf(cfg);
        case Form::general: return gen_general(cfg);
        case Form::small: return gen_small(cfg);
    }
    throw precondition_error("unknown form");
}

std::vector<Basis> generate(const GenConfig& cfg, std::size_t count) {
    std::vector<Basis> out;
    out.reserve(count);
    GenConfig c = cfg;
    for (std::size_t i = 0; i < count; ++i) {
        c.seed = instance_seed(cfg.seed, i);
        out.push_back(generate(c));
    }
    return out;
}

}  // namespace lat2red
