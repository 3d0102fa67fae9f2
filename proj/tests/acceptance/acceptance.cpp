// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 0 only if
// all ten pass. Limits below are wall-clock seconds.
#include "abelcoh/ce.hpp"
#include "abelcoh/correspondence.hpp"
#include "abelcoh/identities.hpp"
#include "abelcoh/ideals.hpp"
#include "abelcoh/oracles.hpp"
#include "abelcoh/poincare.hpp"
#include "oracle.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace abelcoh;

namespace {

constexpr double kLimitIdealCount = 1.0;
constexpr double kLimitHistogram = 1.0;
constexpr double kLimitUpSetOracle = 5.0;
constexpr double kLimitLieOracle = 30.0;
constexpr double kLimitBijection = 120.0;  // rank 7 alone
constexpr double kLimitIdentities = 120.0;
constexpr double kLimitBettiRank3 = 60.0;
constexpr double kLimitBettiRank4 = 1800.0;
constexpr double kLimitClassBasis = 60.0;
constexpr double kLimitDSquared = 10.0;

constexpr int kMaxCombinatorialRank = 8;
constexpr int kMaxBijectionRank = 7;
constexpr std::size_t kLieSamples = 10000;
constexpr std::size_t kDSquaredSamples = 1000;
constexpr std::uint64_t kSeed = 42;

int failures = 0;

void line(int id, bool pass, const std::string& what, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << what << " -- " << detail << std::endl;
    if (!pass) ++failures;
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

std::string first_failure(const VerificationReport& r) {
    for (const auto& c : r.checks())
        if (!c.pass) return c.id;
    return "";
}

template <class F>
void guarded(int id, const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        line(id, false, what, std::string("exception: ") + e.what());
    }
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    guarded(1, "abelian ideal count is 2^n for n = 1..8", [] {
        Stopwatch clock;
        bool ok = true;
        std::string counts;
        for (int n = 1; n <= kMaxCombinatorialRank; ++n) {
            const auto c = enumerate_increasing(n).size();
            ok &= c == (std::size_t{1} << n);
            counts += std::to_string(c) + (n < kMaxCombinatorialRank ? "," : "");
        }
        const double t = clock.seconds();
        line(1, ok && t < kLimitIdealCount, "abelian ideal count is 2^n for n = 1..8",
             "counts " + counts + " in " + secs(t) + " (limit " + secs(kLimitIdealCount) + ")");
    });

    guarded(2, "dimension histogram = prod (1 + t^i) for n = 1..8", [] {
        Stopwatch clock;
        bool ok = dimension_histogram(3).coefficients() == std::vector<std::int64_t>{1, 1, 1, 2, 1, 1, 1};
        for (int n = 1; n <= kMaxCombinatorialRank; ++n)
            ok &= dimension_histogram(n).coefficients() == oracle::distinct_parts(n);
        const double t = clock.seconds();
        line(2, ok && t < kLimitHistogram, "dimension histogram = prod (1 + t^i) for n = 1..8",
             "n=3 -> " + dimension_histogram(3).to_string() + "; " + secs(t) + " (limit " + secs(kLimitHistogram) + ")");
    });

    guarded(3, "up-set test <=> dotted-sum test on every subset of Phi1, n <= 5", [] {
        Stopwatch clock;
        bool ok = true;
        std::uint64_t scanned = 0;
        for (int n = 1; n <= 5; ++n) {
            const auto r = verify_ideal_oracles(n, 0, kSeed);
            const auto* c = r.find("oracle.up_set_vs_dotted_sum");
            ok &= c && c->pass && c->detail.at("mode") == "exhaustive" &&
                  c->detail.at("discrepancies").empty();
            const auto s = c ? c->detail.at("scanned").get<std::uint64_t>() : 0;
            ok &= s == (std::uint64_t{1} << (n * (n + 1) / 2));
            scanned += s;
        }
        const double t = clock.seconds();
        line(3, ok && t < kLimitUpSetOracle, "up-set test <=> dotted-sum test on every subset of Phi1, n <= 5",
             std::to_string(scanned) + " subsets, " + secs(t) + " (limit " + secs(kLimitUpSetOracle) + ")");
    });

    guarded(4, "matrix-level and dotted-sum ideal tests agree, n <= 4", [] {
        Stopwatch clock;
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= 4; ++n) {
            const auto r = verify_lie_oracle(n, kLieSamples, kSeed);
            ok &= r.passed() && r.find("lie.upper_subsets") && r.find("lie.random_subsets");
            if (!r.passed()) bad += " n=" + std::to_string(n) + ":" + first_failure(r);
        }
        const double t = clock.seconds();
        line(4, ok && t < kLimitLieOracle, "matrix-level and dotted-sum ideal tests agree, n <= 4",
             "all Phi1 subsets + " + std::to_string(kLieSamples) + " seeded subsets per rank, " + secs(t) +
                 " (limit " + secs(kLimitLieOracle) + ")" + bad);
    });

    guarded(5, "bijection suite exhaustive for n <= 7", [] {
        bool ok = true;
        double t7 = 0;
        std::string bad;
        std::uint64_t elements = 0;
        for (int n = 1; n <= kMaxBijectionRank; ++n) {
            Stopwatch clock;
            const auto r = verify_bijection(n);
            if (n == kMaxBijectionRank) t7 = clock.seconds();
            ok &= r.passed();
            for (const char* id : {"bijection.injective", "bijection.surjective", "eta.inversions", "xi.increasing",
                                   "support.identity", "degree.additivity"})
                ok &= r.find(id) && r.find(id)->pass;
            if (!r.passed()) bad += " n=" + std::to_string(n) + ":" + first_failure(r);
            if (n == kMaxBijectionRank) elements = r.data().at("elements").get<std::uint64_t>();
        }
        ok &= elements == 645120;
        line(5, ok && t7 < kLimitBijection, "bijection suite exhaustive for n <= 7",
             std::to_string(elements) + " elements at n=7 in " + secs(t7) + " (limit " + secs(kLimitBijection) + ")" +
                 bad);
    });

    guarded(6, "Poincare identities for n <= 7", [] {
        Stopwatch clock;
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= kMaxBijectionRank; ++n) {
            const auto r = verify_identities(n, IdentityOptions{});
            for (const char* id : {"poincare.weyl_histogram", "poincare.sym_histogram", "poincare.exact_division",
                                   "poincare.convolution"})
                ok &= r.find(id) && r.find(id)->pass;
            ok &= r.passed();
            if (!r.passed()) bad += " n=" + std::to_string(n) + ":" + first_failure(r);
        }
        const double t = clock.seconds();
        line(6, ok && t < kLimitIdentities, "Poincare identities for n <= 7",
             secs(t) + " (limit " + secs(kLimitIdentities) + ")" + bad);
    });

    guarded(7, "Betti numbers of the nilradical, n <= 4", [] {
        CohomologyOptions o;
        bool ok = betti_numbers(1, o).betti == std::vector<std::int64_t>{1, 1} &&
                  betti_numbers(2, o).betti == std::vector<std::int64_t>{1, 2, 2, 2, 1};
        Stopwatch c3;
        const auto b3 = betti_numbers(3, o).betti;
        const double t3 = c3.seconds();
        ok &= b3 == oracle::geometric_product(3, 2) && b3.size() == 10;
        o.allow_rank4 = true;
        Stopwatch c4;
        const auto b4 = betti_numbers(4, o).betti;
        const double t4 = c4.seconds();
        ok &= b4 == oracle::geometric_product(4, 2);
        line(7, ok && t3 < kLimitBettiRank3 && t4 < kLimitBettiRank4, "Betti numbers of the nilradical, n <= 4",
             "n=3 " + IntPolynomial(b3).to_string() + " in " + secs(t3) + " (limit " + secs(kLimitBettiRank3) +
                 "); n=4 in " + secs(t4) + " (limit " + secs(kLimitBettiRank4) + ")");
    });

    guarded(8, "monomial classes f_{Phi_w} form a basis of H(n), n <= 3", [] {
        Stopwatch clock;
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= 3; ++n) {
            const auto r = verify_main_theorem(n, CohomologyOptions{});
            for (const char* id : {"cocycles.closed", "classes.count", "classes.independent", "l_cochain.matches"})
                ok &= r.find(id) && r.find(id)->pass;
            if (!r.passed()) bad += " n=" + std::to_string(n) + ":" + first_failure(r);
        }
        const double t = clock.seconds();
        line(8, ok && t < kLimitClassBasis, "monomial classes f_{Phi_w} form a basis of H(n), n <= 3",
             secs(t) + " (limit " + secs(kLimitClassBasis) + ")" + bad);
    });

    guarded(9, "d^2 = 0 on generators and seeded cochains, n <= 4", [] {
        Stopwatch clock;
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            const auto r = verify_d_squared(n, kDSquaredSamples, kSeed);
            ok &= r.passed() && r.find("d.squared.generators") && r.find("d.squared.random");
        }
        const double t = clock.seconds();
        line(9, ok && t < kLimitDSquared, "d^2 = 0 on generators and seeded cochains, n <= 4",
             std::to_string(kDSquaredSamples) + " cochains per rank, " + secs(t) + " (limit " + secs(kLimitDSquared) +
                 ")");
    });

    guarded(10, "verify --rank 3 --seed 42 is byte-identical across runs", [&] {
        if (cli.empty()) {
            line(10, false, "verify --rank 3 --seed 42 is byte-identical across runs", "no CLI path given");
            return;
        }
        const auto dir = std::filesystem::temp_directory_path() / ("abelcoh-accept-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        bool ok = true;
        std::string outputs[2];
        for (int k = 0; k < 2; ++k) {
            const auto path = dir / ("run" + std::to_string(k) + ".json");
            const std::string cmd = "\"" + cli + "\" verify --rank 3 --seed 42 --out \"" + path.string() + "\"";
            ok &= std::system(cmd.c_str()) == 0;
            outputs[k] = slurp(path);
        }
        std::filesystem::remove_all(dir);
        ok &= !outputs[0].empty() && outputs[0] == outputs[1];
        line(10, ok, "verify --rank 3 --seed 42 is byte-identical across runs",
             std::to_string(outputs[0].size()) + " bytes, identical: " + (outputs[0] == outputs[1] ? "yes" : "no"));
    });

    std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
