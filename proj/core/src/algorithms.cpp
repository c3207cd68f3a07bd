#include "lat2red/algorithms.hpp"

#include <string>

#include "lat2red/baselines.hpp"
#include "lat2red/halfgcd.hpp"

namespace lat2red {

namespace {

constexpr AlgorithmInfo kAlgorithms[] = {
    {"crosseuc", "CrossEuc", NormKind::linf, true, true},
    {"hvecsbp", "HVecSBP", NormKind::linf, true, true},
    {"goleuc", "GolEuc", NormKind::linf, true, false},
    {"lagred", "LagRed", NormKind::l2, false, true},
    {"crs", "CRS", NormKind::l2, false, true},
    {"halfgaussiansbp", "HalfGaussianSBP", NormKind::l2, false, true},
    {"eea-hnf-pareuc", "EEA-HNF-ParEuc", NormKind::linf, true, false},
    {"hgcd-hnf-pareuc", "HGCD-HNF-ParEuc", NormKind::linf, true, false},
    {"hgcd-hnf-hvecsbp", "HGCD-HNF-HVecSBP", NormKind::linf, true, false},
};

}  // namespace

std::span<const AlgorithmInfo> algorithms() { return kAlgorithms; }

const AlgorithmInfo* find_algorithm(std::string_view name) {
    for (const auto& a : kAlgorithms)
        if (name == a.name) return &a;
    return nullptr;
}

NormKind parse_norm(std::string_view s) {
    if (s == "linf") return NormKind::linf;
    if (s == "l2") return NormKind::l2;
    throw precondition_error("unknown norm: " + std::string(s));
}

ReductionResult run_algorithm(std::string_view name, std::optional<NormKind> norm, const Basis& B) {
    const AlgorithmInfo* info = find_algorithm(name);
    if (!info) throw precondition_error("unknown algorithm: " + std::string(name));
    const NormKind k = norm.value_or(info->native);
    if ((k == NormKind::linf && !info->supports_linf) || (k == NormKind::l2 && !info->supports_l2))
        throw precondition_error(std::string(name) + " does not support norm " + to_string(k));
    const std::string_view n = info->name;
    if (n == "crosseuc") return k == NormKind::linf ? cross_euc(B) : cross_euc_l2(B);
    if (n == "hvecsbp") return hvec_sbp(B, k);
    if (n == "goleuc") return gol_euc(B);
    if (n == "lagred") return lag_red(B);
    if (n == "crs") return crs(B);
    if (n == "halfgaussiansbp") return half_gaussian_sbp(B);
    return pipeline(info->display, B);
}

}  // namespace lat2red
