#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "lat2red/core.hpp"
#include "lat2red/reduce.hpp"

namespace lat2red {

struct AlgorithmInfo {
    const char* name;  ///< command-line name, e.g. "hvecsbp"
    const char* display;  ///< name used in result tables, e.g. "HVecSBP"
    NormKind native;
    bool supports_linf;
    bool supports_l2;
};

std::span<const AlgorithmInfo> algorithms();
/// nullptr when the name is unknown.
const AlgorithmInfo* find_algorithm(std::string_view name);

/// Runs the named algorithm under `norm` (its native norm when empty). Throws precondition_error for
/// unknown names and unsupported norms.
ReductionResult run_algorithm(std::string_view name, std::optional<NormKind> norm, const Basis& B);

NormKind parse_norm(std::string_view s);

}  // namespace lat2red
