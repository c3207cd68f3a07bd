#pragma once

#include <cstddef>
#include <cstdint>

#include "lat2red/core.hpp"
#include "lat2red/reduce.hpp"

namespace lat2red {

struct SplitParts {
    LVec high;
    LVec low;  ///< coordinates in [0, 2^n_ell)
};

/// v = 2^n_ell * high + low, with floor semantics on negative coordinates.
SplitParts split(const LVec& v, std::size_t n_ell);

struct HVecOutput {
    LVec c;
    LVec d;
    Unimodular M;  ///< [a b] = [c d] * M
};

/// Instrumentation filled in by hvec and hvec_sbp when requested.
struct HVecStats {
    std::uint64_t calls = 0;
    std::uint64_t steps = 0;
    std::uint64_t backups = 0;
    std::size_t max_depth = 0;
    /// Largest iteration count of the first (resp. second) while loop that followed a recursive split.
    std::size_t max_loop1 = 0;
    std::size_t max_loop2 = 0;
};

/// Bit size at or below which hvec stops splitting and runs its while loops directly.
inline constexpr std::size_t kHVecBaseBits = 64;

HVecOutput hvec(const LVec& a, const LVec& b, HVecStats* stats = nullptr, std::size_t base_bits = kHVecBaseBits);

ReductionResult hvec_sbp(const Basis& B, NormKind norm = NormKind::linf, HVecStats* stats = nullptr,
                         std::size_t base_bits = kHVecBaseBits);

struct HgcdOutput {
    BigInt a;
    BigInt b;
    Unimodular M;  ///< (input a, input b)^T = M * (a, b)^T
};

inline constexpr std::size_t kHgcdBaseBits = 256;

/// Half-gcd of a > b > 0: the returned pair straddles floor(#a/2) + 1 bits.
HgcdOutput int_hgcd(const BigInt& a, const BigInt& b, std::size_t base_bits = kHgcdBaseBits);

struct XgcdResult {
    BigInt g;  ///< gcd(a, b) >= 0
    BigInt x;
    BigInt y;  ///< x*a + y*b = g
};

/// Extended gcd via the classical remainder sequence.
XgcdResult xgcd_classical(const BigInt& a, const BigInt& b);
/// Extended gcd driven by int_hgcd.
XgcdResult xgcd_hgcd(const BigInt& a, const BigInt& b);
/// Rewrites (x, y) to the unique pair with 0 <= x < |b|/g; when b = 0 the pair is (sgn a, 0).
void normalize_bezout(const BigInt& a, const BigInt& b, XgcdResult& r);

}  // namespace lat2red
