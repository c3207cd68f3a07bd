#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lat2red/core.hpp"

namespace lat2red {

/// xoshiro256** seeded through splitmix64, so instance streams are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    /// Uniform in [0, bound), bound > 0.
    BigInt uniform_below(const BigInt& bound);
    /// Uniform in [lo, hi].
    BigInt uniform_range(const BigInt& lo, const BigInt& hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the i-th instance of a stream.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

enum class Form { hnf, general, small };

const char* to_string(Form f);
Form parse_form(std::string_view s);

struct GenConfig {
    std::uint64_t seed = 1;
    Form form = Form::small;
    std::size_t n1_dec = 10;
    std::size_t n2_dec = 5;
    mpq_class kappa_target = 1;
    int small_bitmax = 10;
    bool random_signs = false;
};

/// Upper limit of the coefficient bound accepted by gen_small.
inline constexpr std::int64_t kSmallMaxBound = 1000;

Basis gen_hnf(const GenConfig& cfg);
Basis gen_general(const GenConfig& cfg);
Basis gen_small(const GenConfig& cfg);
/// Dispatches on cfg.form.
Basis generate(const GenConfig& cfg);
/// count instances, the i-th generated with seed instance_seed(cfg.seed, i).
std::vector<Basis> generate(const GenConfig& cfg, std::size_t count);

/// p/q of the continued fraction [q0; q1, ...], in lowest terms with q > 0.
std::pair<BigInt, BigInt> convergents(const std::vector<BigInt>& quotients);

/// Basis with (a1, b1) and (a2, b2) the convergents of prefix||s1 and prefix||s2.
Basis basis_from_quotients(const std::vector<BigInt>& prefix, const std::vector<BigInt>& s1,
                           const std::vector<BigInt>& s2);

}  // namespace lat2red
