#include "abelcoh/weyl.hpp"

#include "abelcoh/error.hpp"

#include <bit>
#include <charconv>

namespace abelcoh {

namespace {

std::vector<int> parse_int_list(std::string_view text, char open, char close) {
    const std::string original(text);
    auto trim = [](std::string_view& s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    };
    trim(text);
    if (text.size() < 2 || text.front() != open || text.back() != close) {
        throw InvalidArgument("expected " + std::string(1, open) + "..." + std::string(1, close) +
                              ", got '" + original + "'");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<int> out;
    while (true) {
        trim(text);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{}) throw InvalidArgument("malformed integer list '" + original + "'");
        out.push_back(value);
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
        trim(text);
        if (text.empty()) break;
        if (text.front() != ',') throw InvalidArgument("malformed integer list '" + original + "'");
        text.remove_prefix(1);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, char open, char close) {
    std::string s(1, open);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != 0) s += ',';
        s += std::to_string(v[k]);
    }
    s += close;
    return s;
}

// c1*e_{x1} + c2*e_{x2} with x1 != x2 and |c1| = |c2| = 1.
SignedRoot two_term(int c1, int x1, int c2, int x2) {
    if (x1 > x2) {
        std::swap(c1, c2);
        std::swap(x1, x2);
    }
    const Root r = (c1 == c2) ? Root::sum(x1, x2) : Root::diff(x1, x2);
    return {c1, r};
}

} // namespace

Perm Perm::identity(int n) {
    validate_rank(n);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int m = 0; m < n; ++m) p.img_[m] = static_cast<std::uint8_t>(m + 1);
    return p;
}

Perm Perm::longest(int n) {
    validate_rank(n);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int m = 0; m < n; ++m) p.img_[m] = static_cast<std::uint8_t>(n - m);
    return p;
}

Perm Perm::from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    validate_rank(n);
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::uint32_t seen = 0;
    for (int m = 0; m < n; ++m) {
        const int v = images[m];
        if (v < 1 || v > n || ((seen >> (v - 1)) & 1U)) {
            throw InvalidArgument("not a permutation of 1.." + std::to_string(n) + ": " +
                                  join_ints({images.begin(), images.end()}, '(', ')'));
        }
        seen |= 1U << (v - 1);
        p.img_[m] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Perm Perm::parse(std::string_view text) {
    return from_images(parse_int_list(text, '(', ')'));
}

std::vector<int> Perm::images() const {
    return {img_.begin(), img_.begin() + n_};
}

Perm Perm::inverse() const {
    Perm q;
    q.n_ = n_;
    for (int m = 0; m < n_; ++m) q.img_[img_[m] - 1] = static_cast<std::uint8_t>(m + 1);
    return q;
}

bool Perm::is_identity() const {
    for (int m = 0; m < n_; ++m)
        if (img_[m] != m + 1) return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) throw InvalidArgument("rank mismatch in permutation product");
    Perm c;
    c.n_ = a.n_;
    for (int m = 0; m < a.n_; ++m) c.img_[m] = a.img_[b.img_[m] - 1];
    return c;
}

std::string Perm::to_string() const {
    return join_ints(images(), '(', ')');
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t perm_rank(const Perm& p) {
    const int n = p.size();
    std::uint64_t rank = 0;
    std::uint32_t used = 0;
    for (int m = 1; m <= n; ++m) {
        const int v = p(m);
        const int smaller_unused = v - 1 - std::popcount(used & ((1U << (v - 1)) - 1));
        rank += static_cast<std::uint64_t>(smaller_unused) * factorial(n - m);
        used |= 1U << (v - 1);
    }
    return rank;
}

SignedPerm::SignedPerm(Perm perm, std::uint32_t negated_values) : perm_(perm), negated_(negated_values) {
    if (perm_.size() < 32 && (negated_ >> perm_.size()) != 0) {
        throw InvalidArgument("negated value outside 1.." + std::to_string(perm_.size()));
    }
}

SignedPerm SignedPerm::reflection(int n, int j) {
    if (j < 1 || j > n) throw InvalidArgument("reflection index out of range");
    return {Perm::identity(n), 1U << (j - 1)};
}

SignedPerm SignedPerm::from_signed_images(std::span<const int> images) {
    std::vector<int> abs_images;
    std::uint32_t mask = 0;
    for (int v : images) {
        abs_images.push_back(v < 0 ? -v : v);
        if (v < 0) mask |= 1U << (-v - 1);
    }
    return {Perm::from_images(abs_images), mask};
}

SignedPerm SignedPerm::parse(std::string_view text) {
    return from_signed_images(parse_int_list(text, '[', ']'));
}

int SignedPerm::negated_count() const {
    return std::popcount(negated_);
}

std::vector<int> SignedPerm::signed_images() const {
    std::vector<int> out;
    for (int m = 1; m <= rank(); ++m) out.push_back(image(m));
    return out;
}

SignedPerm SignedPerm::inverse() const {
    // w(e_m) = s e_{p(m)}  =>  w^{-1}(e_{p(m)}) = s e_m
    const Perm q = perm_.inverse();
    std::uint32_t mask = 0;
    for (int m = 1; m <= rank(); ++m)
        if (is_negated(perm_(m))) mask |= 1U << (m - 1);
    return {q, mask};
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
    const Perm p = u.perm_ * v.perm_;
    std::uint32_t mask = 0;
    for (int m = 1; m <= v.rank(); ++m) {
        const bool neg = v.is_negated(v.perm_(m)) != u.is_negated(u.perm_(v.perm_(m)));
        if (neg) mask |= 1U << (p(m) - 1);
    }
    return {p, mask};
}

std::string SignedPerm::to_string() const {
    return join_ints(signed_images(), '[', ']');
}

std::uint64_t group_order(int n) {
    return (std::uint64_t{1} << n) * factorial(n);
}

SignedRoot act_on_root(const SignedPerm& w, const Root& alpha) {
    validate_root(alpha, w.rank());
    const int xi = w.perm()(alpha.i);
    const int si = w.is_negated(xi) ? -1 : 1;
    if (alpha.kind == RootKind::Long) return {si, Root::twice(xi)};
    const int xj = w.perm()(alpha.j);
    const int sj = w.is_negated(xj) ? -1 : 1;
    const int cj = alpha.kind == RootKind::Sum ? sj : -sj;
    return two_term(si, xi, cj, xj);
}

SignedRoot act_on_root(const Perm& sigma, const Root& alpha) {
    return act_on_root(SignedPerm(sigma, 0), alpha);
}

RootSet inversion_set(const SignedPerm& w) {
    const int n = w.rank();
    const SignedPerm inv = w.inverse();
    RootSet out(n);
    for (int k = 0; k < root_count(n); ++k) {
        if (act_on_root(inv, root_at(k, n)).sign < 0) out.insert(k);
    }
    return out;
}

int length(const SignedPerm& w) {
    return inversion_set(w).size();
}

RootSet perm_inversions(const Perm& sigma) {
    const int n = sigma.size();
    const Perm inv = sigma.inverse();
    RootSet out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (inv(i) > inv(j)) out.insert(Root::diff(i, j));
    return out;
}

std::optional<Perm> perm_from_inversions(const RootSet& s) {
    const int n = s.rank();
    validate_rank(n);
    if (!s.is_subset_of(split(n).first)) {
        throw InvalidArgument("permutation inversion sets contain only e_i-e_j roots");
    }
    // position of value v in the image sequence, i.e. sigma^{-1}(v)
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        int pos = 1;
        for (int u = 1; u <= n; ++u) {
            if (u == v) continue;
            const bool u_before_v = (u < v) ? !s.contains(Root::diff(u, v)) : s.contains(Root::diff(v, u));
            if (u_before_v) ++pos;
        }
        if (images[pos - 1] != 0) return std::nullopt;
        images[pos - 1] = v;
    }
    const Perm sigma = Perm::from_images(images);
    if (perm_inversions(sigma) != s) return std::nullopt;
    return sigma;
}

StandardForm standard_form(const SignedPerm& w, JOrder order) {
    StandardForm sf{{}, w.perm()};
    const Perm pos = w.perm().inverse();
    for (int v = 1; v <= w.rank(); ++v)
        if (w.is_negated(v)) sf.j_list.push_back(v);
    std::sort(sf.j_list.begin(), sf.j_list.end(), [&](int a, int b) {
        return order == JOrder::ByImage ? w.perm()(a) < w.perm()(b) : pos(a) < pos(b);
    });
    return sf;
}

SignedPerm recompose(const StandardForm& sf) {
    const int n = sf.sigma0.size();
    SignedPerm w(sf.sigma0, 0);
    for (auto it = sf.j_list.rbegin(); it != sf.j_list.rend(); ++it) w = SignedPerm::reflection(n, *it) * w;
    return w;
}

void check_group_cap(int n, int cap) {
    validate_rank(n);
    if (n > cap) {
        throw CapExceeded("rank " + std::to_string(n) + " exceeds the group enumeration cap " +
                          std::to_string(cap) + " (" + std::to_string(group_order(std::min(n, 20))) +
                          " elements)");
    }
}

} // namespace abelcoh
