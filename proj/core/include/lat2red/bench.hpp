#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lat2red/core.hpp"
#include "lat2red/gen.hpp"
#include "lat2red/reduce.hpp"

namespace lat2red {

/// One timed run. For hnf suites kappa is empty; for general suites n2 is empty.
struct BenchRecord {
    std::string algorithm;
    Form form = Form::hnf;
    std::size_t n1 = 0;
    std::optional<std::size_t> n2;
    std::optional<std::string> kappa;
    int trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t wall_time_ns = 0;
    std::size_t lambda1_bits = 0;
    std::size_t lambda2_bits = 0;
    std::uint64_t steps = 0;
    bool ok = false;
};

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,form,n1,n2,kappa,trial,seed,wall_time_ns,lambda1_bits,lambda2_bits,steps,ok";

std::string to_csv(const BenchRecord& r);

/// A sweep point. kappa = 0 requests the smallest divergence the generator can produce (one differing term).
struct BenchPoint {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    mpq_class kappa = 0;
};

struct SuiteSpec {
    std::string name;
    Form form = Form::hnf;
    NormKind norm = NormKind::linf;
    std::vector<std::string> algorithms;
    std::vector<BenchPoint> points;
};

/// hnf-l2, general-l2, hnf-linf, general-linf and hnf-scaling.
std::vector<std::string> suite_names();
/// Digit counts are the table sizes multiplied by `scale` (at least one digit).
SuiteSpec make_suite(std::string_view name, double scale);

struct BenchOptions {
    std::uint64_t seed = 1;
    int trials = 3;
};

/// Basis of one sweep point and trial; identical for identical (spec, point, trial, seed).
Basis bench_instance(const SuiteSpec& spec, std::size_t point, int trial, std::uint64_t seed,
                     std::uint64_t* instance_seed_out = nullptr);

/// Runs every (point, trial, algorithm), checking each result against cross_euc under the suite norm before
/// its row is handed to `sink`. Stops at the first mismatch (that row has ok = false) and returns false.
bool run_suite(const SuiteSpec& spec, const BenchOptions& opts, const std::function<void(const BenchRecord&)>& sink);

struct MedianRow {
    std::string algorithm;
    std::size_t n1 = 0;
    std::optional<std::size_t> n2;
    std::optional<std::string> kappa;
    double median_ns = 0;
    int samples = 0;
};

/// Median wall time per (algorithm, n1, n2, kappa) over rows with ok = true, in first-appearance order.
std::vector<MedianRow> medians(const std::vector<BenchRecord>& records);

void print_medians(std::ostream& os, const std::vector<MedianRow>& rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Median wall time in nanoseconds of `trials` runs of the named algorithm on B.
double median_time_ns(std::string_view algorithm, NormKind norm, const Basis& B, int trials);

}  // namespace lat2red
