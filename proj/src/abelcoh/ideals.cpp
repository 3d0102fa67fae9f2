#include "abelcoh/ideals.hpp"

#include "abelcoh/error.hpp"
#include "abelcoh/poincare.hpp"

namespace abelcoh {

namespace {

RootSet members_from_bounds(int n, const std::vector<int>& bounds) {
    RootSet s(n);
    for (int t = 1; t <= static_cast<int>(bounds.size()); ++t)
        for (int j = t; j <= bounds[t - 1]; ++j) s.insert(root_index(Root::upper(t, j), n));
    return s;
}

void extend_rows(int n, std::vector<int>& bounds, const std::function<void(const IncreasingSet&)>& f) {
    f(IncreasingSet::from_bounds(n, bounds));
    const int next_row = static_cast<int>(bounds.size()) + 1;
    if (next_row > n) return;
    const int hi = bounds.empty() ? n : bounds.back();
    for (int b = next_row; b <= hi; ++b) {
        bounds.push_back(b);
        extend_rows(n, bounds, f);
        bounds.pop_back();
    }
}

} // namespace

IncreasingSet::IncreasingSet(int n) : n_(n), members_(n) {
    validate_rank(n);
}

IncreasingSet IncreasingSet::from_bounds(int n, std::vector<int> bounds) {
    validate_rank(n);
    for (std::size_t t = 0; t < bounds.size(); ++t) {
        const int row = static_cast<int>(t) + 1;
        const bool ok = bounds[t] >= row && bounds[t] <= n && (t == 0 || bounds[t] <= bounds[t - 1]);
        if (!ok) throw InvalidArgument("invalid increasing-set profile at row " + std::to_string(row));
    }
    IncreasingSet s(n);
    s.members_ = members_from_bounds(n, bounds);
    s.bounds_ = std::move(bounds);
    return s;
}

IncreasingSet IncreasingSet::from_members(const RootSet& members) {
    const int n = members.rank();
    if (!is_increasing(members)) throw InvalidArgument("root set is not an increasing subset");
    std::vector<int> bounds;
    for (int t = 1; t <= n && members.contains(Root::twice(t)); ++t) {
        int b = t;
        while (b < n && members.contains(Root::sum(t, b + 1))) ++b;
        bounds.push_back(b);
    }
    IncreasingSet s = from_bounds(n, std::move(bounds));
    if (s.members_ != members) throw InternalInconsistency("profile does not reproduce the increasing set");
    return s;
}

IncreasingSet IncreasingSet::from_code(int n, std::uint32_t code) {
    validate_rank(n);
    if ((code >> n) != 0) throw InvalidArgument("ideal code out of range");
    std::vector<int> bounds;
    for (int len = n; len >= 1; --len) {
        if (!((code >> (len - 1)) & 1U)) continue;
        const int row = static_cast<int>(bounds.size()) + 1;
        bounds.push_back(row + len - 1);
    }
    return from_bounds(n, std::move(bounds));
}

std::uint32_t IncreasingSet::code() const {
    std::uint32_t c = 0;
    for (int t = 1; t <= row_count(); ++t) c |= 1U << (bounds_[t - 1] - t);
    return c;
}

std::vector<IncreasingSet> enumerate_increasing(int n) {
    std::vector<IncreasingSet> out;
    out.reserve(std::size_t{1} << n);
    for_each_increasing(n, [&](const IncreasingSet& s) { out.push_back(s); });
    return out;
}

void for_each_increasing(int n, const std::function<void(const IncreasingSet&)>& f) {
    validate_rank(n);
    std::vector<int> bounds;
    extend_rows(n, bounds, f);
}

bool is_increasing(const RootSet& s) {
    const int n = s.rank();
    validate_rank(n);
    const auto [lower, upper] = split(n);
    if (!(s & lower).empty()) throw InvalidArgument("increasing subsets live in Phi1; found an e_i-e_j root");
    bool ok = true;
    s.for_each_index([&](int x) {
        const Root rx = root_at(x, n);
        upper.for_each_index([&](int y) {
            if (ok && !s.contains(y) && precedes(rx, root_at(y, n))) ok = false;
        });
    });
    return ok;
}

bool is_abelian_ideal_combinatorial(const RootSet& s, const RootSystem& rs) {
    const int size = rs.size();
    bool ok = true;
    s.for_each_index([&](int a) {
        if (!ok) return;
        for (int b = 0; b < size && ok; ++b) {
            const int c = rs.sum_index(a, b);
            if (c < 0) continue;
            // Psi + Phi+ must land in Psi; Psi + Psi must leave Phi+.
            if (!s.contains(c) || s.contains(b)) ok = false;
        }
    });
    return ok;
}

bool is_abelian_ideal_combinatorial(const RootSet& s) {
    return is_abelian_ideal_combinatorial(s, RootSystem(s.rank()));
}

IntPolynomial dimension_histogram(int n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n * (n + 1) / 2 + 1), 0);
    for_each_increasing(n, [&](const IncreasingSet& s) { ++counts[static_cast<std::size_t>(s.dimension())]; });
    return IntPolynomial(std::move(counts));
}

} // namespace abelcoh
