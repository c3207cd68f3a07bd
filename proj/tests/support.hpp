#pragma once

// Test-side helpers that do not go through the library under test.

#include <cstdint>
#include <random>
#include <utility>

#include <gmpxx.h>

#include "lat2red/core.hpp"
#include "lat2red/reduce.hpp"

namespace testing {

using lat2red::Basis;
using lat2red::BigInt;
using lat2red::LVec;
using lat2red::NormKind;

/// Independent random source for property tests.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_); }

    /// Uniform magnitude below 2^bits with a random sign.
    BigInt signed_bits(unsigned bits) {
        BigInt x = 0;
        for (unsigned done = 0; done < bits; done += 32) {
            const unsigned chunk = std::min(32u, bits - done);
            x <<= chunk;
            x += static_cast<unsigned long>(eng_() & ((std::uint64_t{1} << chunk) - 1));
        }
        return (eng_() & 1) ? BigInt(-x) : x;
    }

    /// Magnitude with exactly `bits` bits and a random sign.
    BigInt exact_bits(unsigned bits) {
        BigInt x = abs(signed_bits(bits - 1));
        x += BigInt(1) << (bits - 1);
        return (eng_() & 1) ? BigInt(-x) : x;
    }

    Basis basis_bits(unsigned bits) {
        for (;;) {
            Basis B{{signed_bits(bits), signed_bits(bits)}, {signed_bits(bits), signed_bits(bits)}};
            if (sgn(lat2red::det(B)) != 0) return B;
        }
    }

    Basis small_basis(std::int64_t bound) {
        for (;;) {
            Basis B{{range(-bound, bound), range(-bound, bound)}, {range(-bound, bound), range(-bound, bound)}};
            if (sgn(lat2red::det(B)) != 0) return B;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline std::int64_t norm_of(std::int64_t x, std::int64_t y, NormKind k) {
    if (k == NormKind::linf) return std::max(std::llabs(x), std::llabs(y));
    return x * x + y * y;
}

/// Successive minima by scanning every coefficient pair with |z| <= radius; no pruning.
inline std::pair<std::int64_t, std::int64_t> brute_minima(const Basis& B, NormKind k, std::int64_t radius) {
    const std::int64_t a1 = B.a.v1.get_si(), a2 = B.a.v2.get_si(), b1 = B.b.v1.get_si(), b2 = B.b.v2.get_si();
    std::int64_t l1 = -1, x1 = 0, y1 = 0;
    for (std::int64_t z1 = -radius; z1 <= radius; ++z1)
        for (std::int64_t z2 = -radius; z2 <= radius; ++z2) {
            if (z1 == 0 && z2 == 0) continue;
            const std::int64_t x = z1 * a1 + z2 * b1, y = z1 * a2 + z2 * b2;
            const std::int64_t n = norm_of(x, y, k);
            if (l1 < 0 || n < l1) l1 = n, x1 = x, y1 = y;
        }
    std::int64_t l2 = -1;
    for (std::int64_t z1 = -radius; z1 <= radius; ++z1)
        for (std::int64_t z2 = -radius; z2 <= radius; ++z2) {
            const std::int64_t x = z1 * a1 + z2 * b1, y = z1 * a2 + z2 * b2;
            if (x1 * y - y1 * x == 0) continue;
            const std::int64_t n = norm_of(x, y, k);
            if (l2 < 0 || n < l2) l2 = n;
        }
    return {l1, l2};
}

/// True when v = z1*a + z2*b for integers z1, z2 (Cramer's rule with an exactness check).
inline bool in_lattice(const Basis& B, const LVec& v) {
    const BigInt d = B.a.v1 * B.b.v2 - B.a.v2 * B.b.v1;
    const BigInt n1 = v.v1 * B.b.v2 - v.v2 * B.b.v1;
    const BigInt n2 = B.a.v1 * v.v2 - B.a.v2 * v.v1;
    return mpz_divisible_p(n1.get_mpz_t(), d.get_mpz_t()) && mpz_divisible_p(n2.get_mpz_t(), d.get_mpz_t());
}

/// Same lattice: equal |det| and each output column lies in the input lattice.
inline bool same_lattice(const Basis& in, const Basis& out) {
    return abs(lat2red::det(in)) == abs(lat2red::det(out)) && in_lattice(in, out.a) && in_lattice(in, out.b);
}

inline BigInt classical_gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (sgn(b) != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace testing
