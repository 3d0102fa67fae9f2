#include "abelcoh/commands.hpp"

#include "abelcoh/ce.hpp"
#include "abelcoh/correspondence.hpp"
#include "abelcoh/error.hpp"
#include "abelcoh/identities.hpp"
#include "abelcoh/ideals.hpp"
#include "abelcoh/liealg.hpp"
#include "abelcoh/oracles.hpp"
#include "abelcoh/poincare.hpp"

#include <algorithm>
#include <sstream>

namespace abelcoh {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string csv(const std::vector<std::string>& header, const Table& rows) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out << ',';
            const bool quote = cells[k].find_first_of(",\"") != std::string::npos;
            if (quote) {
                out << '"';
                for (char c : cells[k]) out << (c == '"' ? "\"\"" : std::string(1, c));
                out << '"';
            } else {
                out << cells[k];
            }
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
}

Table polynomial_rows(const IntPolynomial& p) {
    Table rows;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        rows.push_back({std::to_string(k), std::to_string(p.coefficients()[k])});
    return rows;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += sep;
        s += parts[k];
    }
    return s;
}

void require_json(const Request& r) {
    if (r.format != Format::Json)
        throw InvalidArgument("csv output is offered for histograms and tables only; '" + r.command +
                              "' produces a nested report");
}

CohomologyOptions cohomology_options(const RunConfig& c) {
    CohomologyOptions o;
    o.cap = c.cohomology_cap;
    o.allow_rank4 = c.allow_rank4_cohomology;
    o.workers = c.workers;
    o.cache_dir = c.cache_dir;
    return o;
}

BijectionOptions bijection_options(const RunConfig& c) {
    BijectionOptions o;
    o.cap = c.combinatorial_cap;
    o.workers = c.workers;
    return o;
}

CommandOutput finish(const VerificationReport& report, const Request& r) {
    return {report.to_json(r.timing).dump(2) + "\n", report.passed()};
}

Json ideal_json(const IncreasingSet& s) {
    return Json{{"members", s.members().names()}, {"dimension", s.dimension()}, {"bounds", s.bounds()}};
}

CommandOutput run_ideals(const Request& r, const RunConfig& c) {
    const int n = r.rank;
    if (n > c.combinatorial_cap) throw CapExceeded("ideals: rank " + std::to_string(n) + " exceeds the combinatorial cap " + std::to_string(c.combinatorial_cap));
    const auto ideals = enumerate_increasing(n);
    const IntPolynomial hist = dimension_histogram(n);
    const bool want_hist = r.histogram || !r.list;

    if (r.format == Format::Csv) {
        std::string out;
        if (want_hist) out += csv({"dimension", "count"}, polynomial_rows(hist));
        if (r.list) {
            if (!out.empty()) out += '\n';
            Table rows;
            for (const auto& s : ideals) rows.push_back({std::to_string(s.dimension()), join(s.members().names(), " ")});
            out += csv({"dimension", "members"}, rows);
        }
        return {out, true};
    }

    VerificationReport report(n, "ideals");
    const auto expected = std::uint64_t{1} << n;
    report.add("ideals.count", "number of abelian ideals = 2^n", ideals.size() == expected,
               Json{{"count", ideals.size()}, {"expected", expected}});
    report.add("ideals.histogram", "#{I : dim I = k} = [t^k] prod (1 + t^i)", hist == ideal_generating(n),
               Json{{"enumerated", hist.coefficients()}, {"formula", ideal_generating(n).coefficients()}});
    report.data()["count"] = ideals.size();
    if (want_hist) report.data()["histogram"] = hist.coefficients();
    if (r.list) {
        Json list = Json::array();
        for (const auto& s : ideals) list.push_back(ideal_json(s));
        report.data()["ideals"] = std::move(list);
    }
    return finish(report, r);
}

CommandOutput run_weyl(const Request& r, const RunConfig& c) {
    const int n = r.rank;
    if (!r.witness.empty()) {
        require_json(r);
        const SignedPerm w = SignedPerm::parse(r.witness);
        if (w.rank() != n) throw InvalidArgument("witness rank differs from --rank");
        VerificationReport report(n, "weyl");
        const Json trace = witness_trace(w);
        report.add("weyl.witness_support", "Phi_w = Phi_eta disjoint-union eta sigma_l (xi)", trace.at("support_matches").get<bool>());
        report.add("weyl.witness_roundtrip", "inverse(pair(w)) = w", trace.at("inverse") == w.to_string());
        report.data()["witness"] = trace;
        return finish(report, r);
    }
    check_group_cap(n, c.combinatorial_cap);
    const IntPolynomial hist = weyl_length_histogram(n, c.combinatorial_cap, c.workers);

    if (r.format == Format::Csv) {
        if (r.list) {
            Table rows;
            enumerate_group(n, c.combinatorial_cap, [&](const SignedPerm& w) {
                rows.push_back({w.to_string(), std::to_string(length(w))});
            });
            return {csv({"element", "length"}, rows), true};
        }
        return {csv({"length", "count"}, polynomial_rows(hist)), true};
    }

    VerificationReport report(n, "weyl");
    report.add("weyl.order", "|W| = 2^n n!", static_cast<std::uint64_t>(hist.sum()) == group_order(n),
               Json{{"order", group_order(n)}});
    report.add("weyl.length_histogram", "sum_w t^{|Phi_w|} = prod (1 - t^{2i}) / (1 - t)^n", hist == weyl_poincare(n),
               Json{{"enumerated", hist.coefficients()}, {"formula", weyl_poincare(n).coefficients()}});
    report.data()["order"] = group_order(n);
    report.data()["length_histogram"] = hist.coefficients();
    if (r.list) {
        Json list = Json::array();
        enumerate_group(n, c.combinatorial_cap, [&](const SignedPerm& w) {
            list.push_back(Json{{"element", w.to_string()}, {"length", length(w)}});
        });
        report.data()["elements"] = std::move(list);
    }
    return finish(report, r);
}

CommandOutput run_bijection(const Request& r, const RunConfig& c) {
    require_json(r);
    const int n = r.rank;
    if (!r.witness.empty()) {
        const SignedPerm w = SignedPerm::parse(r.witness);
        if (w.rank() != n) throw InvalidArgument("witness rank differs from --rank");
        VerificationReport report(n, "bijection");
        const Json trace = witness_trace(w);
        report.add("bijection.witness_support", "Phi_w = Phi_eta disjoint-union eta sigma_l (xi)",
                   trace.at("support_matches").get<bool>());
        report.add("bijection.witness_roundtrip", "inverse(pair(w)) = w", trace.at("inverse") == w.to_string());
        report.data()["witness"] = trace;
        return finish(report, r);
    }
    VerificationReport report = verify_bijection(n, bijection_options(c));
    return finish(report, r);
}

CommandOutput run_structure(const Request& r, const RunConfig&) {
    const int n = r.rank;
    const StructureTable table(n);
    const auto rows = table.nonzero();
    auto name = [n](int k) { return to_string(root_at(k, n)); };
    if (r.format == Format::Csv) {
        Table t;
        for (const auto& row : rows)
            t.push_back({name(row.alpha), name(row.beta), name(row.gamma), std::to_string(row.coeff)});
        return {csv({"alpha", "beta", "gamma", "c"}, t), true};
    }
    VerificationReport report(n, "structure");
    report.add("structure.weight_vectors", "[h_k, e_alpha] = alpha(h_k) e_alpha and X^T J + J X = 0",
               root_vectors_are_weight_vectors(n));
    report.add("structure.antisymmetry", "[e_alpha, e_beta] = -[e_beta, e_alpha]", table.is_antisymmetric());
    report.add("structure.jacobi", "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0", table.satisfies_jacobi());
    Json entries = Json::array();
    for (const auto& row : rows)
        entries.push_back(Json{{"alpha", name(row.alpha)}, {"beta", name(row.beta)}, {"gamma", name(row.gamma)}, {"c", row.coeff}});
    report.data()["entries"] = std::move(entries);
    return finish(report, r);
}

CommandOutput run_betti(const Request& r, const RunConfig& c) {
    const int n = r.rank;
    const CohomologyOptions options = cohomology_options(c);
    check_cohomology_cap(n, options);
    Stopwatch clock;
    const BettiResult result = betti_numbers(n, options);
    const double seconds = clock.seconds();
    const IntPolynomial formula = weyl_poincare(n);

    if (r.format == Format::Csv) {
        if (r.per_weight) {
            Table t;
            for (const auto& b : result.blocks) {
                std::vector<std::string> w;
                for (int x : b.key.weight) w.push_back(std::to_string(x));
                t.push_back({std::to_string(b.key.degree), join(w, " "), std::to_string(b.dim), std::to_string(b.rank_out)});
            }
            return {csv({"degree", "weight", "dim", "rank_out"}, t), true};
        }
        Table t;
        for (std::size_t k = 0; k < result.betti.size(); ++k)
            t.push_back({std::to_string(k), std::to_string(result.betti[k]), std::to_string(formula[k])});
        return {csv({"degree", "betti", "formula"}, t), true};
    }

    VerificationReport report(n, "betti");
    report.add("betti.formula", "dim H^i(n) = #{w : |Phi_w| = i} = [t^i] prod (1 - t^{2i}) / (1 - t)^n",
               IntPolynomial(result.betti) == formula,
               Json{{"betti", result.betti}, {"formula", formula.coefficients()}}, seconds);
    std::int64_t total = 0;
    for (auto b : result.betti) total += b;
    report.add("betti.total", "sum_i dim H^i(n) = |W| = 2^n n!", static_cast<std::uint64_t>(total) == group_order(n),
               Json{{"total", total}});
    report.data()["betti"] = result.betti;
    report.data()["block_count"] = result.blocks.size();
    if (r.timing) report.data()["from_cache"] = result.from_cache;
    if (r.per_weight) {
        Json blocks = Json::array();
        for (const auto& b : result.blocks)
            blocks.push_back(Json{{"degree", b.key.degree}, {"weight", b.key.weight}, {"dim", b.dim}, {"rank_out", b.rank_out}});
        report.data()["blocks"] = std::move(blocks);
    }
    return finish(report, r);
}

CommandOutput run_classes(const Request& r, const RunConfig& c) {
    require_json(r);
    return finish(verify_main_theorem(r.rank, cohomology_options(c)), r);
}

IdentityOptions identity_options(const RunConfig& c, bool with_betti) {
    IdentityOptions o;
    o.combinatorial_cap = c.combinatorial_cap;
    o.workers = c.workers;
    if (with_betti) o.cohomology = cohomology_options(c);
    return o;
}

CommandOutput run_poincare(const Request& r, const RunConfig& c) {
    const int n = r.rank;
    if (r.format == Format::Csv) {
        const IntPolynomial w = weyl_poincare(n), s = sym_poincare(n), i = ideal_generating(n),
                            q = ideal_generating_by_division(n);
        Table t;
        for (int k = 0; k <= w.degree(); ++k) {
            const auto u = static_cast<std::size_t>(k);
            t.push_back({std::to_string(k), std::to_string(w[u]), std::to_string(s[u]), std::to_string(i[u]),
                         std::to_string(q[u])});
        }
        return {csv({"degree", "weyl", "sym", "ideal", "ideal_by_division"}, t), true};
    }
    check_group_cap(n, c.combinatorial_cap);
    return finish(verify_identities(n, identity_options(c, false)), r);
}

bool cohomology_within_cap(int n, const CohomologyOptions& o) {
    try {
        check_cohomology_cap(n, o);
        return true;
    } catch (const CapExceeded&) {
        return false;
    }
}

CommandOutput run_verify(const Request& r, const RunConfig& c) {
    require_json(r);
    const int n = r.rank;
    check_group_cap(n, c.combinatorial_cap);
    VerificationReport report(n, "verify");
    Json skipped = Json::array();

    {
        const auto ideals = enumerate_increasing(n);
        const IntPolynomial hist = dimension_histogram(n);
        const auto expected = std::uint64_t{1} << n;
        report.add("ideals.count", "number of abelian ideals = 2^n", ideals.size() == expected,
                   Json{{"count", ideals.size()}, {"expected", expected}});
        report.add("ideals.histogram", "#{I : dim I = k} = [t^k] prod (1 + t^i)", hist == ideal_generating(n),
                   Json{{"enumerated", hist.coefficients()}});
    }
    report.merge(verify_ideal_oracles(n, c.oracle_samples, c.seed));
    report.merge(verify_lie_oracle(n, c.oracle_samples, c.seed));
    report.merge(verify_bijection(n, bijection_options(c)));

    const CohomologyOptions co = cohomology_options(c);
    const bool cohomology = cohomology_within_cap(n, co);
    report.merge(verify_identities(n, identity_options(c, cohomology)));
    if (cohomology) {
        report.merge(verify_main_theorem(n, co));
    } else {
        skipped.push_back("poincare.betti");
        skipped.push_back("classes");
    }
    if (n <= 4) {
        report.merge(verify_d_squared(n, c.d_squared_samples, c.seed));
    } else {
        skipped.push_back("d_squared");
    }
    report.data()["seed"] = c.seed;
    report.data()["skipped"] = std::move(skipped);
    return finish(report, r);
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"ideals", "weyl",    "bijection", "structure",
                                                   "betti",  "classes", "poincare",  "verify"};
    return names;
}

CommandOutput run_command(const Request& r, const RunConfig& c) {
    validate_rank(r.rank);
    if (c.combinatorial_cap < 1 || c.cohomology_cap < 1) throw InvalidArgument("caps must be at least 1");
    if (r.command == "ideals") return run_ideals(r, c);
    if (r.command == "weyl") return run_weyl(r, c);
    if (r.command == "bijection") return run_bijection(r, c);
    if (r.command == "structure") return run_structure(r, c);
    if (r.command == "betti") return run_betti(r, c);
    if (r.command == "classes") return run_classes(r, c);
    if (r.command == "poincare") return run_poincare(r, c);
    if (r.command == "verify") return run_verify(r, c);
    throw InvalidArgument("unknown command '" + r.command + "'");
}

} // namespace abelcoh
