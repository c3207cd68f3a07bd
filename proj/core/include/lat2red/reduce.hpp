#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "lat2red/core.hpp"

namespace lat2red {

enum class NormKind { linf, l2 };

const char* to_string(NormKind k);

struct StepResult {
    Basis basis;
    BigInt q;
};

/// lambda1/lambda2 are sup-norms for linf and squared lengths for l2.
struct ReductionResult {
    Basis basis;
    BigInt lambda1;
    BigInt lambda2;
    std::uint64_t steps = 0;
    NormKind norm_kind = NormKind::linf;
    /// The reduced basis reached before the extraction tail, for algorithms built on the reduction loops.
    std::optional<Basis> reduced;
};

/// a1*a2*b1*b2 <= 0 and (|a1|-|a2|)(|b1|-|b2|) <= 0.
bool is_reduced(const Basis& B);
bool is_reduced(const LVec& a, const LVec& b);

/// Sign of a1*a2*b1*b2.
int sign_product(const LVec& a, const LVec& b);
/// Sign of (|a1|-|a2|)(|b1|-|b2|).
int gap_product(const LVec& a, const LVec& b);

StepResult umtrans1(const LVec& a, const LVec& b);
StepResult umtrans2(const LVec& a, const LVec& b);

ReductionResult cross_euc(const Basis& B);
ReductionResult cross_euc_l2(const Basis& B);

/// Vector of the lattice achieving lambda2 in the sup-norm, built from a reduced basis with ||a|| <= ||b||.
LVec extract_second_linf(const Basis& B);

/// Shortest basis (u, v) in the Euclidean norm, built from a reduced basis.
std::pair<LVec, LVec> extract_l2_shortest(const Basis& B);

namespace detail {

/// In-place step (a, b) := (b, a - q b) with the quotient rule of umtrans1.
void umtrans1_inplace(LVec& a, LVec& b, BigInt& q, BigInt& tmp);
/// In-place step (a, b) := (b, a - q b) with the quotient rule of umtrans2.
void umtrans2_inplace(LVec& a, LVec& b, BigInt& q);
/// (a, b) := (b, a - q b).
void euclid_step(LVec& a, LVec& b, const BigInt& q);

/// Runs the two reduction loops until the pair is reduced; returns the number of steps.
std::uint64_t reduce_loops(LVec& a, LVec& b);

/// Sign fix, norm-order swap and extraction shared by the reduced-basis drivers.
ReductionResult finish_linf(LVec a, LVec b, std::uint64_t steps);
ReductionResult finish_l2(LVec a, LVec b, std::uint64_t steps);

void require_nonsingular(const Basis& B);

}  // namespace detail

}  // namespace lat2red
