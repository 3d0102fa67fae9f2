#include "abelcoh/correspondence.hpp"

#include "abelcoh/error.hpp"
#include "abelcoh/workers.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace abelcoh {

RootSet relabel_upper(const RootSet& s, const Perm& pi) {
    const int n = s.rank();
    RootSet out(n);
    s.for_each_index([&](int k) {
        const Root r = root_at(k, n);
        if (r.is_diff()) throw InvalidArgument("relabel_upper applies to e_i+e_j roots only");
        out.insert(root_index(Root::upper(pi(r.i), pi(r.j)), n));
    });
    return out;
}

namespace {

std::optional<Perm> eta_from_inversions(const RootSet& inversions) {
    return perm_from_inversions(inversions & split(inversions.rank()).first);
}

RootSet xi_members(const RootSet& inversions, const Perm& eta_w) {
    const int n = inversions.rank();
    return relabel_upper(inversions & split(n).second, Perm::longest(n) * eta_w.inverse());
}

} // namespace

Perm eta(const SignedPerm& w) {
    const auto e = eta_from_inversions(inversion_set(w));
    if (!e) {
        throw InternalInconsistency("Phi_w cap Phi0 is not a permutation inversion set for w = " + w.to_string());
    }
    return *e;
}

Perm eta_formula(const StandardForm& sf) {
    std::vector<int> seq;
    for (int v : sf.sigma0.images())
        if (std::find(sf.j_list.begin(), sf.j_list.end(), v) == sf.j_list.end()) seq.push_back(v);
    for (auto it = sf.j_list.rbegin(); it != sf.j_list.rend(); ++it) seq.push_back(*it);
    return Perm::from_images(seq);
}

IncreasingSet xi(const SignedPerm& w) {
    const RootSet inversions = inversion_set(w);
    const auto e = eta_from_inversions(inversions);
    if (!e) throw InternalInconsistency("eta undefined for w = " + w.to_string());
    const RootSet members = xi_members(inversions, *e);
    if (!is_increasing(members)) throw InternalInconsistency("xi(w) is not increasing for w = " + w.to_string());
    return IncreasingSet::from_members(members);
}

RootSet xi_formula(const StandardForm& sf, BoundReading reading) {
    const int n = sf.sigma0.size();
    const Perm pos = sf.sigma0.inverse();
    RootSet out(n);
    const int k = static_cast<int>(sf.j_list.size());
    for (int i = 1; i <= k; ++i) {
        const int ji = sf.j_list[static_cast<std::size_t>(i - 1)];
        int bound = 0;
        switch (reading) {
        case BoundReading::Subscripted:
            bound = n + 1 - pos(ji);
            break;
        case BoundReading::Literal:
            bound = n + 1 - pos(i);
            break;
        case BoundReading::Offset:
            bound = n + i - pos(ji);
            break;
        }
        for (int j = i; j <= std::min(bound, n); ++j) out.insert(root_index(Root::upper(i, j), n));
    }
    return out;
}

CorrespondencePair pair(const SignedPerm& w) {
    return {eta(w), xi(w)};
}

namespace {

SignedPerm construct_preimage(const Perm& sigma, const IncreasingSet& psi) {
    const int n = sigma.size();
    const int k = psi.row_count();
    const auto& bounds = psi.bounds();
    // j_t = sigma sigma_l (t) = sigma(n + 1 - t); j_t sits after n - b_t of the
    // remaining letters sigma(1), ..., sigma(n - k).
    std::vector<int> seq;
    std::uint32_t negated = 0;
    int t = 1;
    for (int r = 0; r <= n - k; ++r) {
        while (t <= k && n - bounds[static_cast<std::size_t>(t - 1)] == r) {
            const int jt = sigma(n + 1 - t);
            seq.push_back(jt);
            negated |= 1U << (jt - 1);
            ++t;
        }
        if (r < n - k) seq.push_back(sigma(r + 1));
    }
    if (static_cast<int>(seq.size()) != n) return SignedPerm::identity(n);
    return {Perm::from_images(seq), negated};
}

bool maps_to(const SignedPerm& w, const Perm& sigma, const IncreasingSet& psi) {
    const RootSet inversions = inversion_set(w);
    const auto e = eta_from_inversions(inversions);
    return e && *e == sigma && xi_members(inversions, *e) == psi.members();
}

} // namespace

InverseResult inverse_traced(const Perm& sigma, const IncreasingSet& psi, int search_cap) {
    if (sigma.size() != psi.rank()) throw InvalidArgument("rank mismatch between permutation and ideal");
    const int n = sigma.size();
    const SignedPerm candidate = construct_preimage(sigma, psi);
    if (maps_to(candidate, sigma, psi)) return {candidate, false};

    std::optional<SignedPerm> found;
    enumerate_group(n, search_cap, [&](const SignedPerm& w) {
        if (!found && maps_to(w, sigma, psi)) found = w;
    });
    if (!found) {
        throw InternalInconsistency("no preimage for (" + sigma.to_string() + ", ideal of dimension " +
                                    std::to_string(psi.dimension()) + ")");
    }
    return {*found, true};
}

SignedPerm inverse(const Perm& sigma, const IncreasingSet& psi) {
    return inverse_traced(sigma, psi).element;
}

RootSet l_support(const Perm& sigma, const IncreasingSet& psi) {
    if (sigma.size() != psi.rank()) throw InvalidArgument("rank mismatch between permutation and ideal");
    return perm_inversions(sigma) | relabel_upper(psi.members(), sigma * Perm::longest(sigma.size()));
}

namespace {

constexpr std::array kOrders{JOrder::ByImage, JOrder::ByPosition};
constexpr std::array kReadings{BoundReading::Subscripted, BoundReading::Literal, BoundReading::Offset};
constexpr std::size_t kXiVariants = kOrders.size() * kReadings.size();

const char* order_name(JOrder o) {
    return o == JOrder::ByImage ? "by_image" : "by_position";
}

const char* reading_name(BoundReading r) {
    switch (r) {
    case BoundReading::Subscripted:
        return "subscripted";
    case BoundReading::Literal:
        return "literal";
    case BoundReading::Offset:
        return "offset";
    }
    return "";
}

struct Tally {
    std::int64_t count = 0;
    std::vector<Json> examples;

    void record(Json example, std::size_t listed) {
        ++count;
        if (examples.size() < listed) examples.push_back(std::move(example));
    }
    void absorb(const Tally& other, std::size_t listed) {
        count += other.count;
        for (const auto& e : other.examples)
            if (examples.size() < listed) examples.push_back(e);
    }
};

struct ForwardChunk {
    std::vector<std::uint64_t> codes;
    std::int64_t elements = 0;
    Tally eta_undefined, eta_mismatch, xi_not_increasing, support_mismatch, degree_mismatch, roundtrip_mismatch;
    std::int64_t fallbacks = 0;
    std::array<Tally, kOrders.size()> eta_disagree;
    std::array<Tally, kXiVariants> xi_disagree;
};

struct ReverseChunk {
    std::int64_t pairs = 0;
    std::int64_t fallbacks = 0;
    Tally mismatch;
};

Json names(const RootSet& s) {
    return s.names();
}

ForwardChunk forward_chunk(int n, std::uint32_t mask, const BijectionOptions& options) {
    ForwardChunk out;
    const std::size_t listed = options.listed;
    const auto [lower, upper] = split(n);
    const Perm longest = Perm::longest(n);
    for_each_element(n, mask, mask + 1, [&](const SignedPerm& w) {
        ++out.elements;
        const RootSet inversions = inversion_set(w);
        const auto e = perm_from_inversions(inversions & lower);
        if (!e) {
            out.eta_undefined.record(Json{{"element", w.to_string()}}, listed);
            return;
        }
        if (perm_inversions(*e) != (inversions & lower)) {
            out.eta_mismatch.record(Json{{"element", w.to_string()}, {"eta", e->to_string()}}, listed);
        }
        const RootSet xi_set = relabel_upper(inversions & upper, longest * e->inverse());
        if (!is_increasing(xi_set)) {
            out.xi_not_increasing.record(Json{{"element", w.to_string()}, {"xi", names(xi_set)}}, listed);
            return;
        }
        const IncreasingSet psi = IncreasingSet::from_members(xi_set);
        out.codes.push_back(perm_rank(*e) * (std::uint64_t{1} << n) + psi.code());

        if (l_support(*e, psi) != inversions) {
            out.support_mismatch.record(Json{{"element", w.to_string()}, {"support", names(l_support(*e, psi))},
                                             {"inversions", names(inversions)}},
                                        listed);
        }
        if (inversions.size() != perm_inversions(*e).size() + psi.dimension()) {
            out.degree_mismatch.record(Json{{"element", w.to_string()}}, listed);
        }
        const InverseResult back = inverse_traced(*e, psi, options.cap);
        if (back.used_fallback) ++out.fallbacks;
        if (!(back.element == w)) {
            out.roundtrip_mismatch.record(Json{{"element", w.to_string()}, {"inverse", back.element.to_string()}},
                                          listed);
        }

        for (std::size_t o = 0; o < kOrders.size(); ++o) {
            const StandardForm sf = standard_form(w, kOrders[o]);
            const Perm ef = eta_formula(sf);
            if (ef != *e) {
                out.eta_disagree[o].record(
                    Json{{"element", w.to_string()}, {"eta", e->to_string()}, {"formula", ef.to_string()}}, listed);
            }
            for (std::size_t r = 0; r < kReadings.size(); ++r) {
                const RootSet xf = xi_formula(sf, kReadings[r]);
                if (xf != xi_set) {
                    out.xi_disagree[o * kReadings.size() + r].record(
                        Json{{"element", w.to_string()}, {"xi", names(xi_set)}, {"formula", names(xf)}}, listed);
                }
            }
        }
    });
    return out;
}

ReverseChunk reverse_chunk(int n, std::uint32_t code, const BijectionOptions& options) {
    ReverseChunk out;
    const IncreasingSet psi = IncreasingSet::from_code(n, code);
    enumerate_perms(n, [&](const Perm& sigma) {
        ++out.pairs;
        const InverseResult back = inverse_traced(sigma, psi, options.cap);
        if (back.used_fallback) ++out.fallbacks;
        if (!maps_to(back.element, sigma, psi)) {
            out.mismatch.record(Json{{"sigma", sigma.to_string()}, {"ideal", names(psi.members())},
                                     {"inverse", back.element.to_string()}},
                                options.listed);
        }
    });
    return out;
}

Json tally_json(const Tally& t) {
    return Json{{"failures", t.count}, {"examples", t.examples}};
}

} // namespace

VerificationReport verify_bijection(int n, const BijectionOptions& options) {
    check_group_cap(n, options.cap);
    VerificationReport report(n, "bijection");
    const std::size_t listed = options.listed;
    const std::uint64_t order = group_order(n);
    const std::uint64_t ideals = std::uint64_t{1} << n;
    const std::uint64_t target_size = factorial(n) * ideals;

    Stopwatch forward_clock;
    auto chunks = map_chunks<ForwardChunk>(static_cast<std::size_t>(ideals), options.workers, [&](std::size_t mask) {
        return forward_chunk(n, static_cast<std::uint32_t>(mask), options);
    });
    ForwardChunk total;
    for (auto& c : chunks) {
        total.elements += c.elements;
        total.codes.insert(total.codes.end(), c.codes.begin(), c.codes.end());
        total.eta_undefined.absorb(c.eta_undefined, listed);
        total.eta_mismatch.absorb(c.eta_mismatch, listed);
        total.xi_not_increasing.absorb(c.xi_not_increasing, listed);
        total.support_mismatch.absorb(c.support_mismatch, listed);
        total.degree_mismatch.absorb(c.degree_mismatch, listed);
        total.roundtrip_mismatch.absorb(c.roundtrip_mismatch, listed);
        total.fallbacks += c.fallbacks;
        for (std::size_t o = 0; o < kOrders.size(); ++o) total.eta_disagree[o].absorb(c.eta_disagree[o], listed);
        for (std::size_t v = 0; v < kXiVariants; ++v) total.xi_disagree[v].absorb(c.xi_disagree[v], listed);
    }
    chunks.clear();
    const double forward_seconds = forward_clock.seconds();

    std::sort(total.codes.begin(), total.codes.end());
    const auto duplicate = std::adjacent_find(total.codes.begin(), total.codes.end());
    const std::uint64_t distinct =
        static_cast<std::uint64_t>(std::unique(total.codes.begin(), total.codes.end()) - total.codes.begin());
    total.codes.resize(distinct);
    const bool in_range = total.codes.empty() || total.codes.back() < target_size;

    std::vector<std::uint32_t> ideal_codes;
    for (auto c : total.codes) ideal_codes.push_back(static_cast<std::uint32_t>(c % ideals));
    std::sort(ideal_codes.begin(), ideal_codes.end());
    const auto distinct_ideals =
        static_cast<std::uint64_t>(std::unique(ideal_codes.begin(), ideal_codes.end()) - ideal_codes.begin());

    Stopwatch reverse_clock;
    auto reverse = map_chunks<ReverseChunk>(static_cast<std::size_t>(ideals), options.workers, [&](std::size_t code) {
        return reverse_chunk(n, static_cast<std::uint32_t>(code), options);
    });
    ReverseChunk reverse_total;
    for (const auto& r : reverse) {
        reverse_total.pairs += r.pairs;
        reverse_total.fallbacks += r.fallbacks;
        reverse_total.mismatch.absorb(r.mismatch, listed);
    }
    const double reverse_seconds = reverse_clock.seconds();

    const bool injective = duplicate == total.codes.end() && total.eta_undefined.count == 0 &&
                           total.xi_not_increasing.count == 0;
    report.add("bijection.injective", "w -> (eta(w), xi(w)) is injective on W(C_n)", injective,
               Json{{"elements", total.elements}, {"distinct_images", distinct}}, forward_seconds);
    report.add("bijection.surjective", "image of w -> (eta(w), xi(w)) is all of S_n x Upsilon",
               distinct == target_size && in_range && static_cast<std::uint64_t>(total.elements) == order,
               Json{{"image_size", distinct}, {"target_size", target_size}});
    report.add("eta.inversions", "Phi_{eta_w} = Phi_w cap Phi0",
               total.eta_undefined.count == 0 && total.eta_mismatch.count == 0,
               Json{{"undefined", tally_json(total.eta_undefined)}, {"mismatch", tally_json(total.eta_mismatch)}});
    report.add("xi.increasing", "sigma_l eta_w^{-1}(Phi_w cap Phi1) is an increasing subset of Phi1",
               total.xi_not_increasing.count == 0, tally_json(total.xi_not_increasing));
    report.add("support.identity", "Phi_{eta_w} u eta_w sigma_l(xi_w) = Phi_w", total.support_mismatch.count == 0,
               tally_json(total.support_mismatch));
    report.add("degree.additivity", "|Phi_w| = |Phi_{eta_w}| + dim I_{xi_w}", total.degree_mismatch.count == 0,
               tally_json(total.degree_mismatch));
    report.add("inverse.roundtrip", "inverse(pair(w)) = w and pair(inverse(sigma, Psi)) = (sigma, Psi)",
               total.roundtrip_mismatch.count == 0 && reverse_total.mismatch.count == 0 &&
                   static_cast<std::uint64_t>(reverse_total.pairs) == target_size,
               Json{{"forward", tally_json(total.roundtrip_mismatch)},
                    {"reverse", tally_json(reverse_total.mismatch)},
                    {"reverse_pairs", reverse_total.pairs}},
               reverse_seconds);
    report.add("bijection.ideal_count", "|Upsilon| = |W| / |S_n| = 2^n",
               distinct_ideals == ideals && order / factorial(n) == ideals,
               Json{{"distinct_xi", distinct_ideals}, {"expected", ideals}});

    Json eta_json = Json::object();
    for (std::size_t o = 0; o < kOrders.size(); ++o) {
        eta_json[order_name(kOrders[o])] =
            Json{{"agree", total.elements - total.eta_disagree[o].count},
                 {"disagree", total.eta_disagree[o].count},
                 {"examples", total.eta_disagree[o].examples}};
    }
    Json xi_json = Json::object();
    for (std::size_t o = 0; o < kOrders.size(); ++o) {
        for (std::size_t r = 0; r < kReadings.size(); ++r) {
            const auto& t = total.xi_disagree[o * kReadings.size() + r];
            xi_json[std::string(order_name(kOrders[o])) + "/" + reading_name(kReadings[r])] =
                Json{{"agree", total.elements - t.count}, {"disagree", t.count}, {"examples", t.examples}};
        }
    }
    report.data()["elements"] = total.elements;
    report.data()["inverse_fallbacks"] = total.fallbacks + reverse_total.fallbacks;
    report.data()["formula_crosscheck"] = Json{{"normative", {{"eta", "by_image"}, {"xi", "by_image/subscripted"}}},
                                               {"eta", std::move(eta_json)},
                                               {"xi", std::move(xi_json)}};
    return report;
}

Json witness_trace(const SignedPerm& w) {
    const int n = w.rank();
    const RootSet inversions = inversion_set(w);
    const StandardForm by_image = standard_form(w, JOrder::ByImage);
    const StandardForm by_position = standard_form(w, JOrder::ByPosition);
    const CorrespondencePair p = pair(w);
    const RootSet support = l_support(p.eta, p.xi);
    auto sf_json = [](const StandardForm& sf) {
        return Json{{"j_list", sf.j_list}, {"sigma0", sf.sigma0.to_string()}};
    };
    Json out;
    out["element"] = w.to_string();
    out["rank"] = n;
    out["length"] = inversions.size();
    out["inversion_set"] = names(inversions);
    out["standard_form"] = sf_json(by_image);
    out["standard_form_by_position"] = sf_json(by_position);
    out["eta"] = p.eta.to_string();
    out["eta_formula"] = eta_formula(by_image).to_string();
    out["eta_formula_by_position"] = eta_formula(by_position).to_string();
    out["xi"] = names(p.xi.members());
    out["xi_bounds"] = p.xi.bounds();
    out["xi_formula"] = names(xi_formula(by_image));
    out["l_support"] = names(support);
    out["support_matches"] = support == inversions;
    out["inverse"] = inverse(p.eta, p.xi).to_string();
    return out;
}

} // namespace abelcoh
