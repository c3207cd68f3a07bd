#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "lat2red/core.hpp"
#include "lat2red/reduce.hpp"

namespace lat2red {

/// Successive minima found by exhaustive enumeration. Under l2 the lambdas are squared lengths.
struct MinimaWitness {
    BigInt lambda1;
    LVec v1;
    BigInt lambda2;
    LVec v2;
    NormKind norm_kind = NormKind::linf;
    /// Coefficients of v1 and v2 over the input columns.
    std::int64_t z1[2] = {0, 0};
    std::int64_t z2[2] = {0, 0};
};

/// Largest coefficient bound the enumeration accepts.
inline constexpr std::int64_t kOracleMaxBound = 10000;

/// Coefficient bound Z = ceil(R * (|a1|+|a2|+|b1|+|b2|) / |det|), R the shorter column norm
/// (rounded up to an integer length under l2). Empty when det = 0 or the entries are too large.
std::optional<std::int64_t> enumeration_bound(const Basis& B, NormKind norm);

/// Throws precondition_error on det = 0 or when the bound exceeds kOracleMaxBound.
MinimaWitness enum_minima(const Basis& B, NormKind norm);

struct DifficultyMeasure {
    mpq_class delta;          ///< |a1/b1 - a2/b2|
    std::int64_t delta_digits = 0;  ///< floor(-log10 delta)
    mpq_class kappa;          ///< fraction of differing continued-fraction terms
};

/// Exact count of decimal digits of |x|; 0 has one digit.
std::size_t decimal_digits(const BigInt& x);

/// Continued-fraction quotients of p/q (q != 0), last quotient >= 2 when there is more than one.
std::vector<BigInt> cf_quotients(const BigInt& p, const BigInt& q);

DifficultyMeasure measure_delta(const Basis& B);
mpq_class measure_kappa(const Basis& B);
/// Both measures in one record.
DifficultyMeasure measure_difficulty(const Basis& B);

}  // namespace lat2red
