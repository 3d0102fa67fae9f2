// abelcoh command-line front end. Talks to the library through the C API only.
#include <abelcoh/abelcoh.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitUsage = 2;

struct Options {
    int rank = 0;
    std::string format = "json";
    std::string out;
    unsigned workers = 1;
    std::uint64_t seed = 42;
    bool allow_rank4 = false;
    bool list = false;
    bool histogram = false;
    bool per_weight = false;
    bool timing = false;
    std::string witness;
    std::string cache_dir;
    int combinatorial_cap = 8;
    int cohomology_cap = 3;
};

unsigned default_workers() {
    if (const char* env = std::getenv("ABELCOH_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "abelcoh: ignoring invalid ABELCOH_WORKERS='" << env << "'\n";
    }
    return 1;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--rank,-n", o.rank, "rank n of sp(2n)")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write output to PATH instead of stdout");
    sub->add_option("--workers", o.workers, "worker threads (default: $ABELCOH_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--cache-dir", o.cache_dir, "cache directory for complex ranks (default: $ABELCOH_CACHE_DIR)");
    sub->add_option("--combinatorial-cap", o.combinatorial_cap, "largest rank for group enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cohomology-cap", o.cohomology_cap, "largest rank for cohomology")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-rank4-cohomology", o.allow_rank4, "permit rank-4 cohomology computations");
    sub->add_flag("--timing", o.timing, "include per-check timings in the JSON report");
}

int report_error(abelcoh_status status) {
    std::cerr << "abelcoh: " << abelcoh_status_name(status) << ": " << abelcoh_last_error() << '\n';
    return status == ABELCOH_INVALID_ARGUMENT || status == ABELCOH_CAP_EXCEEDED ? kExitUsage : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian ideals of the Borel subalgebra of sp(2n) and the cohomology of its nilradical"};
    app.require_subcommand(1);
    Options o;
    o.workers = default_workers();
    if (const char* env = std::getenv("ABELCOH_CACHE_DIR")) o.cache_dir = env;

    auto* ideals = app.add_subcommand("ideals", "enumerate abelian ideals");
    ideals->add_flag("--list", o.list, "list every ideal");
    ideals->add_flag("--histogram", o.histogram, "dimension histogram");
    auto* weyl = app.add_subcommand("weyl", "Weyl group lengths");
    weyl->add_flag("--list", o.list, "list every element");
    weyl->add_option("--witness", o.witness, "trace one element, e.g. [2,-1,3]");
    auto* bijection = app.add_subcommand("bijection", "verify W <-> S_n x ideals");
    bijection->add_option("--witness", o.witness, "trace one element, e.g. [2,-1,3]");
    auto* structure = app.add_subcommand("structure", "structure constants of the nilradical");
    auto* betti = app.add_subcommand("betti", "Betti numbers of the nilradical");
    betti->add_flag("--per-weight", o.per_weight, "per (degree, weight) block ranks");
    auto* classes = app.add_subcommand("classes", "check the monomial cohomology basis");
    auto* poincare = app.add_subcommand("poincare", "generating functions and identities");
    auto* verify = app.add_subcommand("verify", "run every check for one rank");
    for (auto* sub : {ideals, weyl, bijection, structure, betti, classes, poincare, verify}) add_common(sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    abelcoh_session* raw = nullptr;
    if (auto s = abelcoh_session_create(&raw); s != ABELCOH_OK) return report_error(s);
    std::unique_ptr<abelcoh_session, decltype(&abelcoh_session_destroy)> session(raw, abelcoh_session_destroy);
    for (auto s : {abelcoh_session_set_workers(raw, o.workers), abelcoh_session_set_seed(raw, o.seed),
                   abelcoh_session_set_caps(raw, o.combinatorial_cap, o.cohomology_cap),
                   abelcoh_session_set_allow_rank4(raw, o.allow_rank4 ? 1 : 0),
                   abelcoh_session_set_cache_dir(raw, o.cache_dir.c_str())}) {
        if (s != ABELCOH_OK) return report_error(s);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    abelcoh_request request{};
    request.command = command.c_str();
    request.rank = o.rank;
    request.format = o.format == "csv" ? ABELCOH_FORMAT_CSV : ABELCOH_FORMAT_JSON;
    request.list = o.list;
    request.histogram = o.histogram;
    request.per_weight = o.per_weight;
    request.timing = o.timing;
    request.witness = o.witness.empty() ? nullptr : o.witness.c_str();

    abelcoh_report* report = nullptr;
    if (auto s = abelcoh_run(raw, &request, &report); s != ABELCOH_OK) return report_error(s);
    std::unique_ptr<abelcoh_report, decltype(&abelcoh_report_destroy)> guard(report, abelcoh_report_destroy);

    if (o.out.empty()) {
        std::fputs(abelcoh_report_text(report), stdout);
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << abelcoh_report_text(report);
        if (!file) {
            std::cerr << "abelcoh: cannot write " << o.out << '\n';
            return kExitUsage;
        }
    }
    if (!abelcoh_report_passed(report)) std::cerr << "abelcoh: verification failed\n";
    return abelcoh_report_exit_code(report);
}
