#include "lat2red/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "lat2red/algorithms.hpp"
#include "lat2red/textio.hpp"

namespace lat2red {

std::string to_csv(const BenchRecord& r) {
    std::ostringstream os;
    os << r.algorithm << ',' << to_string(r.form) << ',' << r.n1 << ',';
    if (r.n2) os << *r.n2;
    os << ',';
    if (r.kappa) os << *r.kappa;
    os << ',' << r.trial << ',' << r.seed << ',' << r.wall_time_ns << ',' << r.lambda1_bits << ','
       << r.lambda2_bits << ',' << r.steps << ',' << (r.ok ? "true" : "false");
    return os.str();
}

namespace {

std::size_t scaled(double digits, double scale) {
    return static_cast<std::size_t>(std::max(1.0, std::round(digits * scale)));
}

std::vector<BenchPoint> hnf_points(double n1, std::initializer_list<double> n2s, double scale) {
    std::vector<BenchPoint> out;
    for (double n2 : n2s) out.push_back({scaled(n1, scale), std::min(scaled(n2, scale), scaled(n1, scale)), 0});
    return out;
}

std::vector<BenchPoint> general_points(double n, std::initializer_list<const char*> kappas, double scale) {
    std::vector<BenchPoint> out;
    for (const char* k : kappas) {
        out.push_back({scaled(n, scale), 0, parse_rational(k)});
    }
    return out;
}

std::string kappa_label(const mpq_class& k) {
    if (sgn(k) == 0) return "0";
    std::ostringstream os;
    os << std::setprecision(6) << k.get_d();
    return os.str();
}

}  // namespace

std::vector<std::string> suite_names() { return {"hnf-l2", "general-l2", "hnf-linf", "general-linf", "hnf-scaling"}; }

SuiteSpec make_suite(std::string_view name, double scale) {
    if (!(scale > 0)) throw precondition_error("bench scale must be positive");
    SuiteSpec s;
    s.name = std::string(name);
    if (name == "hnf-l2") {
        s.form = Form::hnf;
        s.norm = NormKind::l2;
        s.algorithms = {"crosseuc", "crs", "lagred", "halfgaussiansbp", "hvecsbp"};
        s.points = hnf_points(2e5, {2e5, 1.8e5, 1.6e5, 1.4e5, 1.2e5, 1e5, 8e4, 6e4, 4e4, 2e4, 1e4, 1e3, 1e2, 1}, scale);
    } else if (name == "general-l2") {
        s.form = Form::general;
        s.norm = NormKind::l2;
        s.algorithms = {"crosseuc", "crs", "lagred", "halfgaussiansbp", "hvecsbp"};
        s.points = general_points(2e5,
                                  {"0", "0.125", "0.25", "0.375", "0.5", "0.625", "0.75", "0.875", "0.95", "0.975",
                                   "0.995", "0.9975", "0.9995", "0.99975", "0.99995", "1"},
                                  scale);
    } else if (name == "hnf-linf") {
        s.form = Form::hnf;
        s.norm = NormKind::linf;
        s.algorithms = {"hvecsbp", "crosseuc", "goleuc"};
        s.points = hnf_points(1e6, {1e6, 8e5, 6e5, 4e5, 2e5, 1e5, 8e4, 6e4, 4e4, 2e4, 1e4, 5e3, 1e3, 1e2, 1}, scale);
    } else if (name == "general-linf") {
        s.form = Form::general;
        s.norm = NormKind::linf;
        s.algorithms = {"hvecsbp", "hgcd-hnf-hvecsbp", "hgcd-hnf-pareuc", "crosseuc", "eea-hnf-pareuc", "goleuc"};
        s.points = general_points(1e6,
                                  {"0", "0.125", "0.25", "0.275", "0.3", "0.375", "0.5", "0.625", "0.75", "0.875",
                                   "0.95", "0.975", "0.995", "0.9975", "0.9995", "0.99975", "0.99995", "1"},
                                  scale);
    } else if (name == "hnf-scaling") {
        s.form = Form::hnf;
        s.norm = NormKind::linf;
        s.algorithms = {"crosseuc", "hvecsbp"};
        for (double n1 : {1e4, 2e4, 4e4, 8e4, 1.6e5}) s.points.push_back({scaled(n1, scale), scaled(n1 / 2, scale), 0});
    } else {
        throw precondition_error("unknown suite: " + std::string(name));
    }
    return s;
}

Basis bench_instance(const SuiteSpec& spec, std::size_t point, int trial, std::uint64_t seed,
                     std::uint64_t* instance_seed_out) {
    const BenchPoint& p = spec.points.at(point);
    GenConfig cfg;
    cfg.seed = instance_seed(instance_seed(seed, point), static_cast<std::uint64_t>(trial));
    if (instance_seed_out) *instance_seed_out = cfg.seed;
    cfg.form = spec.form;
    cfg.n1_dec = p.n1;
    cfg.n2_dec = p.n2;
    // The smallest positive target rounds the divergent suffix down to a single term.
    cfg.kappa_target = sgn(p.kappa) == 0 ? mpq_class(1, 1000000) : p.kappa;
    return generate(cfg);
}

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace

bool run_suite(const SuiteSpec& spec, const BenchOptions& opts, const std::function<void(const BenchRecord&)>& sink) {
    if (opts.trials < 1) throw precondition_error("bench needs at least one trial");
    for (std::size_t pi = 0; pi < spec.points.size(); ++pi) {
        const BenchPoint& p = spec.points[pi];
        for (int t = 0; t < opts.trials; ++t) {
            std::uint64_t iseed = 0;
            const Basis B = bench_instance(spec, pi, t, opts.seed, &iseed);
            const ReductionResult ref = run_algorithm("crosseuc", spec.norm, B);
            for (const auto& alg : spec.algorithms) {
                const auto t0 = std::chrono::steady_clock::now();
                const ReductionResult r = run_algorithm(alg, spec.norm, B);
                BenchRecord rec;
                rec.wall_time_ns = elapsed_ns(t0);
                rec.algorithm = alg;
                rec.form = spec.form;
                rec.n1 = p.n1;
                if (spec.form == Form::hnf)
                    rec.n2 = p.n2;
                else
                    rec.kappa = kappa_label(p.kappa);
                rec.trial = t;
                rec.seed = iseed;
                rec.lambda1_bits = bit_size(r.lambda1);
                rec.lambda2_bits = bit_size(r.lambda2);
                rec.steps = r.steps;
                rec.ok = r.lambda1 == ref.lambda1 && r.lambda2 == ref.lambda2;
                sink(rec);
                if (!rec.ok) return false;
            }
        }
    }
    return true;
}

std::vector<MedianRow> medians(const std::vector<BenchRecord>& records) {
    using Key = std::tuple<std::string, std::size_t, std::optional<std::size_t>, std::optional<std::string>>;
    std::vector<Key> order;
    std::map<Key, std::vector<double>> groups;
    for (const auto& r : records) {
        if (!r.ok) continue;
        Key k{r.algorithm, r.n1, r.n2, r.kappa};
        auto [it, inserted] = groups.try_emplace(k);
        if (inserted) order.push_back(k);
        it->second.push_back(static_cast<double>(r.wall_time_ns));
    }
    std::vector<MedianRow> out;
    for (const auto& k : order) {
        auto& v = groups[k];
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        const double med = n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
        out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), med, static_cast<int>(n)});
    }
    return out;
}

void print_medians(std::ostream& os, const std::vector<MedianRow>& rows) {
    os << "median wall time (seconds)\n";
    for (const auto& r : rows) {
        os << "  " << std::left << std::setw(18) << r.algorithm << " n1=" << std::setw(8) << r.n1;
        if (r.n2) os << " n2=" << std::setw(8) << *r.n2;
        if (r.kappa) os << " kappa=" << std::setw(8) << *r.kappa;
        os << ' ' << std::scientific << std::setprecision(3) << r.median_ns * 1e-9 << std::defaultfloat << " ("
           << r.samples << " trials)\n";
    }
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw precondition_error("slope needs at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double median_time_ns(std::string_view algorithm, NormKind norm, const Basis& B, int trials) {
    std::vector<double> v;
    for (int i = 0; i < trials; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const ReductionResult r = run_algorithm(algorithm, norm, B);
        v.push_back(static_cast<double>(elapsed_ns(t0)));
        if (sgn(r.lambda1) == 0) throw std::logic_error("zero minimum");
    }
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace lat2red
