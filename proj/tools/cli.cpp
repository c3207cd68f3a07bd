#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lat2red/algorithms.hpp"
#include "lat2red/bench.hpp"
#include "lat2red/gen.hpp"
#include "lat2red/oracle.hpp"
#include "lat2red/textio.hpp"

namespace lat2red::cli {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* s = std::getenv("LAT2RED_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// Writes to --out when given, otherwise to the command's output stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw precondition_error("cannot open " + path + " for writing");
            os_ = file_.get();
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

class Source {
public:
    explicit Source(const std::string& path) : is_(&std::cin) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
            if (!*file_) throw precondition_error("cannot open " + path);
            is_ = file_.get();
        }
    }
    std::istream& stream() { return *is_; }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* is_;
};

struct GenFlags {
    std::string form = "small";
    std::size_t n1 = 10;
    std::size_t n2 = 5;
    std::string kappa;
    std::size_t count = 1;
    std::uint64_t seed = default_seed();
    int bitmax = 10;
    bool random_signs = false;
};

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
    cmd->add_option("--form", g.form, "hnf, general or small")->check(CLI::IsMember({"hnf", "general", "small"}));
    cmd->add_option("--n1", g.n1, "decimal digits of the large entries");
    cmd->add_option("--n2", g.n2, "decimal digits of c (hnf form)");
    cmd->add_option("--kappa", g.kappa, "fraction of differing continued-fraction terms (general form)");
    cmd->add_option("--count", g.count, "number of bases");
    cmd->add_option("--seed", g.seed, "base seed (default: LAT2RED_SEED or 1)");
    cmd->add_option("--bitmax", g.bitmax, "coordinate bit bound (small form)");
    cmd->add_flag("--random-signs", g.random_signs, "randomize coordinate signs (general form)");
}

GenConfig to_config(const GenFlags& g) {
    GenConfig c;
    c.seed = g.seed;
    c.form = parse_form(g.form);
    c.n1_dec = g.n1;
    c.n2_dec = g.n2;
    c.kappa_target = g.kappa.empty() ? mpq_class(1) : parse_rational(g.kappa);
    c.small_bitmax = g.bitmax;
    c.random_signs = g.random_signs;
    if (c.form == Form::hnf && c.n2_dec > c.n1_dec) throw precondition_error("--n2 must not exceed --n1");
    return c;
}

std::string lambdas(const ReductionResult& r) {
    const char* suffix = r.norm_kind == NormKind::l2 ? "_sq=" : "=";
    return std::string("lambda1") + suffix + r.lambda1.get_str() + " lambda2" + suffix + r.lambda2.get_str();
}

int cmd_gen(const GenFlags& g, const std::string& out_path, std::ostream& out) {
    const GenConfig cfg = to_config(g);
    Sink sink(out_path, out);
    for (std::size_t i = 0; i < g.count; ++i) {
        GenConfig c = cfg;
        c.seed = instance_seed(cfg.seed, i);
        sink.stream() << format_basis(generate(c)) << '\n';
    }
    return 0;
}

struct ReduceFlags {
    std::string alg;
    std::string norm;
    std::string in;
    std::string out;
};

int cmd_reduce(const ReduceFlags& f, std::ostream& out, std::ostream& err) {
    if (!find_algorithm(f.alg)) {
        err << "error: unknown algorithm " << f.alg << '\n';
        return kExitUsage;
    }
    std::optional<NormKind> norm;
    if (!f.norm.empty()) norm = parse_norm(f.norm);
    Source src(f.in);
    Sink sink(f.out, out);
    std::ostream& os = sink.stream();
    std::string line;
    std::size_t line_no = 0;
    int failures = 0;
    while (std::getline(src.stream(), line)) {
        ++line_no;
        try {
            auto B = parse_basis_line(line);
            if (!B) continue;
            const ReductionResult r = run_algorithm(f.alg, norm, *B);
            os << format_basis(r.basis) << ' ' << lambdas(r) << " steps=" << r.steps << '\n';
        } catch (const precondition_error& e) {
            ++failures;
            os << "error line=" << line_no << ' ' << e.what() << '\n';
            err << "line " << line_no << ": " << e.what() << '\n';
        }
    }
    return failures ? kExitMismatch : 0;
}

struct VerifyFlags {
    std::string mode = "oracle";
    std::string in;
    std::vector<std::string> algs;
    GenFlags gen;
    bool count_set = false;
};

struct Check {
    std::string alg;
    NormKind norm;
};

std::vector<Check> checks_for(const std::vector<std::string>& filter) {
    std::vector<Check> out;
    for (const auto& a : algorithms()) {
        if (!filter.empty() && std::find(filter.begin(), filter.end(), a.name) == filter.end()) continue;
        if (a.supports_linf) out.push_back({a.name, NormKind::linf});
        if (a.supports_l2) out.push_back({a.name, NormKind::l2});
    }
    return out;
}

void dump_mismatch(std::ostream& err, const Check& c, const Basis& B, const std::string& expected,
                   const std::optional<ReductionResult>& got, const std::string& failure) {
    err << "MISMATCH alg=" << c.alg << " norm=" << to_string(c.norm) << " basis=" << format_basis(B) << '\n'
        << "  expected " << expected << '\n';
    if (got)
        err << "  got " << lambdas(*got) << " basis=" << format_basis(got->basis) << '\n';
    else
        err << "  got exception: " << failure << '\n';
    err << "  reproduce: echo '" << format_basis(B) << "' | lat2red reduce --alg " << c.alg << " --norm "
        << to_string(c.norm) << '\n';
}

std::string witness(const MinimaWitness& w) {
    const char* suffix = w.norm_kind == NormKind::l2 ? "_sq=" : "=";
    return std::string("lambda1") + suffix + w.lambda1.get_str() + " lambda2" + suffix + w.lambda2.get_str() +
           " v1=" + to_string(w.v1) + " v2=" + to_string(w.v2) + " z1=(" + std::to_string(w.z1[0]) + ", " +
           std::to_string(w.z1[1]) + ") z2=(" + std::to_string(w.z2[0]) + ", " + std::to_string(w.z2[1]) + ")";
}

// Runs one check; returns the result or the failure text.
std::optional<ReductionResult> attempt(const Check& c, const Basis& B, std::string& failure) {
    try {
        return run_algorithm(c.alg, c.norm, B);
    } catch (const std::exception& e) {
        failure = e.what();
        return std::nullopt;
    }
}

int cmd_verify(VerifyFlags f, std::ostream& err) {
    if (f.mode != "oracle" && f.mode != "cross") throw precondition_error("--mode must be oracle or cross");
    const bool oracle = f.mode == "oracle";
    const auto checks = checks_for(f.algs);
    if (checks.empty()) throw precondition_error("no algorithm selected");

    // Instances come from --in, or from the generator (small form for oracle mode, general form for cross).
    std::vector<Basis> instances;
    if (!f.in.empty()) {
        Source src(f.in);
        std::size_t line_no = 0;
        while (auto B = read_basis(src.stream(), &line_no)) instances.push_back(*B);
    } else {
        if (!oracle && f.gen.form == "small") {
            f.gen.form = "general";
            f.gen.n1 = 1233;
        }
        if (!f.count_set) f.gen.count = oracle ? 1000 : 100;
        GenConfig cfg = to_config(f.gen);
        static const char* kKappas[] = {"1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8", "1"};
        for (std::size_t i = 0; i < f.gen.count; ++i) {
            GenConfig c = cfg;
            c.seed = instance_seed(cfg.seed, i);
            if (c.form == Form::general && f.gen.kappa.empty()) c.kappa_target = parse_rational(kKappas[i % 8]);
            instances.push_back(generate(c));
        }
    }
    if (instances.empty()) {
        err << "warning: no instances, zero checks performed\n";
        return 0;
    }

    std::size_t performed = 0, mismatches = 0, skipped = 0;
    for (const Basis& B : instances) {
        if (oracle) {
            std::optional<MinimaWitness> w[2];
            try {
                w[0] = enum_minima(B, NormKind::linf);
                w[1] = enum_minima(B, NormKind::l2);
            } catch (const precondition_error& e) {
                ++skipped;
                err << "skip " << format_basis(B) << ": " << e.what() << '\n';
                continue;
            }
            for (const auto& c : checks) {
                const MinimaWitness& ref = *w[c.norm == NormKind::l2];
                std::string failure;
                auto got = attempt(c, B, failure);
                ++performed;
                if (!got || got->lambda1 != ref.lambda1 || got->lambda2 != ref.lambda2) {
                    ++mismatches;
                    dump_mismatch(err, c, B, witness(ref), got, failure);
                }
            }
        } else {
            for (NormKind k : {NormKind::linf, NormKind::l2}) {
                std::optional<ReductionResult> first;
                for (const auto& c : checks) {
                    if (c.norm != k) continue;
                    std::string failure;
                    auto got = attempt(c, B, failure);
                    ++performed;
                    if (!first && got) {
                        first = got;
                        continue;
                    }
                    if (!got || got->lambda1 != first->lambda1 || got->lambda2 != first->lambda2) {
                        ++mismatches;
                        dump_mismatch(err, c, B, first ? lambdas(*first) : std::string("(none)"), got, failure);
                    }
                }
            }
        }
    }
    err << "verify " << f.mode << ": " << instances.size() << " instances, " << performed << " checks, " << skipped
        << " skipped, " << mismatches << " mismatches\n";
    return mismatches ? kExitMismatch : 0;
}

struct BenchFlags {
    std::string suite;
    double scale = 0.1;
    int trials = 3;
    std::uint64_t seed = default_seed();
    std::string out;
    std::vector<std::string> algs;
};

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
    SuiteSpec spec = make_suite(f.suite, f.scale);
    if (!f.algs.empty()) {
        for (const auto& a : f.algs)
            if (std::find(spec.algorithms.begin(), spec.algorithms.end(), a) == spec.algorithms.end())
                throw precondition_error("algorithm " + a + " is not part of suite " + f.suite);
        spec.algorithms = f.algs;
    }
    Sink sink(f.out, out);
    std::ostream& os = sink.stream();
    os << kBenchCsvHeader << '\n';
    std::vector<BenchRecord> records;
    const bool ok = run_suite(spec, {f.seed, f.trials}, [&](const BenchRecord& r) {
        os << to_csv(r) << '\n';
        os.flush();
        records.push_back(r);
    });
    if (!ok) {
        const BenchRecord& bad = records.back();
        err << "error: " << bad.algorithm << " disagrees with the reference on seed " << bad.seed
            << "; suite aborted\n";
        return kExitMismatch;
    }
    print_medians(err, medians(records));
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact reduction of 2-dimensional integer lattice bases", "lat2red"};
    app.require_subcommand(1);

    GenFlags gen;
    std::string gen_out;
    auto* g = app.add_subcommand("gen", "generate bases, one per line");
    add_gen_flags(g, gen);
    g->add_option("--out", gen_out, "output file (default: standard output)");

    ReduceFlags red;
    auto* r = app.add_subcommand("reduce", "reduce every basis of the input");
    r->add_option("--alg", red.alg, "algorithm name")->required();
    r->add_option("--norm", red.norm, "linf or l2 (default: the algorithm's native norm)")
        ->check(CLI::IsMember({"linf", "l2"}));
    r->add_option("--in", red.in, "input file (default: standard input)");
    r->add_option("--out", red.out, "output file (default: standard output)");

    VerifyFlags ver;
    auto* v = app.add_subcommand("verify", "check algorithms against the oracle or against each other");
    v->add_option("--mode", ver.mode, "oracle or cross")->check(CLI::IsMember({"oracle", "cross"}));
    v->add_option("--in", ver.in, "instance file (default: generated instances)");
    v->add_option("--algs", ver.algs, "restrict to these algorithms")->delimiter(',');
    add_gen_flags(v, ver.gen);

    BenchFlags bench;
    auto* b = app.add_subcommand("bench", "time a suite and write CSV");
    b->add_option("--suite", bench.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    b->add_option("--scale", bench.scale, "multiplier on the table digit counts");
    b->add_option("--trials", bench.trials, "instances per sweep point")->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seed, "base seed (default: LAT2RED_SEED or 1)");
    b->add_option("--out", bench.out, "CSV file (default: standard output)");
    b->add_option("--algs", bench.algs, "restrict to these algorithms")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (g->parsed()) return cmd_gen(gen, gen_out, out);
        if (r->parsed()) return cmd_reduce(red, out, err);
        if (v->parsed()) {
            ver.count_set = v->count("--count") > 0;
            return cmd_verify(ver, err);
        }
        return cmd_bench(bench, out, err);
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace lat2red::cli
