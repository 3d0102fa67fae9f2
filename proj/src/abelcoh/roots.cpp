#include "abelcoh/roots.hpp"

#include "abelcoh/error.hpp"

#include <charconv>
#include <tuple>

namespace abelcoh {

void validate_rank(int n) {
    if (n < 1 || n > kMaxRank) {
        throw InvalidArgument("rank must be between 1 and " + std::to_string(kMaxRank) +
                              ", got " + std::to_string(n));
    }
}

std::string to_string(const Root& r) {
    switch (r.kind) {
    case RootKind::Long:
        return "2e" + std::to_string(r.i);
    case RootKind::Sum:
        return "e" + std::to_string(r.i) + "+e" + std::to_string(r.j);
    case RootKind::Diff:
        return "e" + std::to_string(r.i) + "-e" + std::to_string(r.j);
    }
    return {};
}

std::string to_string(const SignedRoot& r) {
    return (r.sign < 0 ? "-(" : "+(") + to_string(r.root) + ")";
}

namespace {

int parse_index(std::string_view& text) {
    if (text.empty() || text.front() != 'e') throw InvalidArgument("expected 'e<index>'");
    text.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data()) throw InvalidArgument("expected root index");
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    return value;
}

} // namespace

Root parse_root(std::string_view text) {
    const std::string original(text);
    try {
        if (!text.empty() && text.front() == '2') {
            text.remove_prefix(1);
            const int i = parse_index(text);
            if (!text.empty()) throw InvalidArgument("trailing characters");
            return Root::twice(i);
        }
        const int i = parse_index(text);
        if (text.empty()) throw InvalidArgument("missing second index");
        const char op = text.front();
        text.remove_prefix(1);
        const int j = parse_index(text);
        if (!text.empty()) throw InvalidArgument("trailing characters");
        if (op != '+' && op != '-') throw InvalidArgument("expected '+' or '-'");
        if (i >= j) throw InvalidArgument("indices must satisfy i < j");
        if (op == '+') return Root::sum(i, j);
        return Root::diff(i, j);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument("cannot parse root '" + original + "': " + e.what());
    }
}

void validate_root(const Root& r, int n) {
    const bool ok = r.kind == RootKind::Long ? (r.i >= 1 && r.i <= n && r.j == r.i)
                                             : (r.i >= 1 && r.i < r.j && r.j <= n);
    if (!ok) throw InvalidArgument("'" + to_string(r) + "' is not a positive root of rank " + std::to_string(n));
}

int root_index(const Root& r, int n) {
    const int d = diff_count(n);
    switch (r.kind) {
    case RootKind::Diff:
        return (r.i - 1) * (2 * n - r.i) / 2 + (r.j - r.i - 1);
    case RootKind::Sum:
        return d + (r.i - 1) * (2 * n - r.i) / 2 + (r.j - r.i - 1);
    case RootKind::Long:
        return 2 * d + r.i - 1;
    }
    return -1;
}

Root root_at(int index, int n) {
    const int d = diff_count(n);
    if (index >= 2 * d) return Root::twice(index - 2 * d + 1);
    const RootKind kind = index < d ? RootKind::Diff : RootKind::Sum;
    int rest = index < d ? index : index - d;
    for (int i = 1; i < n; ++i) {
        const int row = n - i;
        if (rest < row) return {kind, i, i + 1 + rest};
        rest -= row;
    }
    throw InvalidArgument("root index out of range");
}

std::vector<Root> positive_roots(int n) {
    validate_rank(n);
    std::vector<Root> out;
    out.reserve(static_cast<std::size_t>(root_count(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::diff(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::sum(i, j));
    for (int i = 1; i <= n; ++i) out.push_back(Root::twice(i));
    return out;
}

std::vector<int> coefficients(const Root& r, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    switch (r.kind) {
    case RootKind::Long:
        v[r.i - 1] = 2;
        break;
    case RootKind::Sum:
        v[r.i - 1] = 1;
        v[r.j - 1] = 1;
        break;
    case RootKind::Diff:
        v[r.i - 1] = 1;
        v[r.j - 1] = -1;
        break;
    }
    return v;
}

std::optional<SignedRoot> classify(std::span<const int> coeffs) {
    int first = -1;
    int second = -1;
    int nonzero = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (++nonzero > 2) return std::nullopt;
        (first < 0 ? first : second) = static_cast<int>(k);
    }
    if (nonzero == 1) {
        const int c = coeffs[first];
        if (c != 2 && c != -2) return std::nullopt;
        return SignedRoot{c > 0 ? 1 : -1, Root::twice(first + 1)};
    }
    if (nonzero != 2) return std::nullopt;
    const int a = coeffs[first];
    const int b = coeffs[second];
    if ((a != 1 && a != -1) || (b != 1 && b != -1)) return std::nullopt;
    const int sign = a;
    const Root r = (a == b) ? Root::sum(first + 1, second + 1) : Root::diff(first + 1, second + 1);
    return SignedRoot{sign, r};
}

RootSet::RootSet(int n, std::span<const Root> roots) : rank_(static_cast<std::uint8_t>(n)) {
    for (const Root& r : roots) insert(r);
}

RootSet RootSet::from_words(int n, std::uint64_t lo, std::uint64_t hi) {
    RootSet s(n);
    s.words_ = {lo, hi};
    return s;
}

bool RootSet::contains(const Root& r) const {
    validate_root(r, rank_);
    return contains(root_index(r, rank_));
}

void RootSet::insert(const Root& r) {
    validate_root(r, rank_);
    insert(root_index(r, rank_));
}

int RootSet::count_above(int index) const {
    const int w = index >> 6;
    const int b = index & 63;
    int count = 0;
    if (b < 63) count += std::popcount(words_[w] >> (b + 1));
    if (w == 0) count += std::popcount(words_[1]);
    return count;
}

std::vector<int> RootSet::indices() const {
    std::vector<int> out;
    for_each_index([&](int i) { out.push_back(i); });
    return out;
}

std::vector<Root> RootSet::roots() const {
    std::vector<Root> out;
    for_each_index([&](int i) { out.push_back(root_at(i, rank_)); });
    return out;
}

std::vector<std::string> RootSet::names() const {
    std::vector<std::string> out;
    for_each_index([&](int i) { out.push_back(to_string(root_at(i, rank_))); });
    return out;
}

RootSet all_positive(int n) {
    validate_rank(n);
    RootSet s(n);
    for (int k = 0; k < root_count(n); ++k) s.insert(k);
    return s;
}

std::pair<RootSet, RootSet> split(int n) {
    validate_rank(n);
    RootSet lower(n);
    RootSet upper(n);
    for (int k = 0; k < root_count(n); ++k) (k < diff_count(n) ? lower : upper).insert(k);
    return {lower, upper};
}

std::optional<Root> dotted_sum(const Root& alpha, const Root& beta, int n) {
    std::vector<int> v = coefficients(alpha, n);
    const std::vector<int> w = coefficients(beta, n);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
    const auto c = classify(v);
    if (!c || c->sign < 0) return std::nullopt;
    return c->root;
}

bool precedes(const Root& x, const Root& y) {
    if (x.is_diff() || y.is_diff()) {
        throw InvalidArgument("the order is defined on e_i+e_j roots only, got " + to_string(x) +
                              " and " + to_string(y));
    }
    return x.i >= y.i && x.j >= y.j;
}

RootSystem::RootSystem(int n) : n_(n), roots_(positive_roots(n)) {
    const int size = static_cast<int>(roots_.size());
    coeffs_.reserve(static_cast<std::size_t>(size * n));
    for (const Root& r : roots_) {
        const auto c = abelcoh::coefficients(r, n);
        coeffs_.insert(coeffs_.end(), c.begin(), c.end());
    }
    sums_.assign(static_cast<std::size_t>(size * size), -1);
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            if (auto s = dotted_sum(roots_[a], roots_[b], n)) sums_[a * size + b] = root_index(*s, n);
        }
    }
    std::tie(diff_, upper_) = split(n);
    all_ = all_positive(n);
}

} // namespace abelcoh
