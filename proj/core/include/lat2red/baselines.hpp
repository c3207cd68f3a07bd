#pragma once

#include <string_view>
#include <vector>

#include "lat2red/core.hpp"
#include "lat2red/reduce.hpp"

namespace lat2red {

/// Upper-triangular basis with columns (a, 0) and (b, c).
struct HnfBasis {
    BigInt a;
    BigInt b;
    BigInt c;

    Basis to_basis() const { return {{a, BigInt(0)}, {b, c}}; }
    bool operator==(const HnfBasis&) const = default;
};

struct HnfResult {
    HnfBasis H;
    Unimodular U;  ///< B * U = H
};

ReductionResult lag_red(const Basis& B);
ReductionResult crs(const Basis& B);
ReductionResult gol_euc(const Basis& B);

inline constexpr int kHalfGaussianC = 4;

struct HalfGaussianOutput {
    Unimodular M;                 ///< (a, b) = (a*, b*) * M
    std::vector<BigInt> quotients;  ///< M = Q(q_k) ... Q(q_1) with Q(q) = (q 1; 1 0)
};

/// Requires an admissible pair: inner(a, b) >= 0 and |a| >= |b| in the Euclidean norm.
Unimodular half_gaussian(const LVec& a, const LVec& b, int c_param = kHalfGaussianC);
HalfGaussianOutput half_gaussian_detailed(const LVec& a, const LVec& b, int c_param = kHalfGaussianC);

ReductionResult half_gaussian_sbp(const Basis& B, int c_param = kHalfGaussianC);

HnfResult hnf_via_eea(const Basis& B);
HnfResult hnf_via_hgcd(const Basis& B);

enum class Pipeline { eea_hnf_pareuc, hgcd_hnf_pareuc, hgcd_hnf_hvecsbp, cross_euc, hvec_sbp, gol_euc };

inline constexpr Pipeline kAllPipelines[] = {Pipeline::eea_hnf_pareuc, Pipeline::hgcd_hnf_pareuc,
                                             Pipeline::hgcd_hnf_hvecsbp, Pipeline::cross_euc,
                                             Pipeline::hvec_sbp, Pipeline::gol_euc};

const char* to_string(Pipeline p);
/// Accepts the display names ("HGCD-HNF-ParEuc") and their lowercase forms.
Pipeline parse_pipeline(std::string_view name);

ReductionResult pipeline(Pipeline p, const Basis& B);
ReductionResult pipeline(std::string_view name, const Basis& B);

}  // namespace lat2red
