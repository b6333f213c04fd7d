#include "gfc/extremal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gfc {

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

FamilySpec FamilySpec::join_family(int s, int a, int b) {
    if (s < 0 || a < 0 || b < 0) throw std::invalid_argument("family: negative parameter");
    return {FamilyKind::JoinCliquePlusIsolated, s, a, b};
}

FamilySpec FamilySpec::split_like(int s, int i) {
    if (s < 0 || i < 0) throw std::invalid_argument("family: negative parameter");
    return {FamilyKind::SplitLike, s, 0, i};
}

FamilySpec FamilySpec::complete(int n) {
    if (n < 1) throw std::invalid_argument("family: order must be positive");
    return {FamilyKind::Complete, n, 0, 0};
}

FamilySpec FamilySpec::star(int n) {
    if (n < 2) throw std::invalid_argument("star: order must be at least 2");
    return {FamilyKind::Star, n, 0, 0};
}

int FamilySpec::order() const {
    switch (kind) {
        case FamilyKind::JoinCliquePlusIsolated: return s + a + b;
        case FamilyKind::SplitLike: return s + b;
        case FamilyKind::Complete:
        case FamilyKind::Star: return s;
    }
    return 0;
}

std::string FamilySpec::to_dsl() const {
    switch (kind) {
        case FamilyKind::JoinCliquePlusIsolated:
            return "K" + std::to_string(s) + " v (K" + std::to_string(a) + " + " +
                   std::to_string(b) + "*K1)";
        case FamilyKind::SplitLike:
            return "K" + std::to_string(s) + " v " + std::to_string(b) + "*K1";
        case FamilyKind::Complete: return "K" + std::to_string(s);
        case FamilyKind::Star: return "K1," + std::to_string(s - 1);
    }
    return {};
}

Graph build(const FamilySpec& spec) {
    if (spec.order() > kMaxOrder) throw std::invalid_argument("family: order exceeds 64");
    switch (spec.kind) {
        case FamilyKind::JoinCliquePlusIsolated:
            return join(complete_graph(spec.s),
                        disjoint_union(complete_graph(spec.a), empty_graph(spec.b)));
        case FamilyKind::SplitLike:
            return join(complete_graph(spec.s), empty_graph(spec.b));
        case FamilyKind::Complete: return complete_graph(spec.s);
        case FamilyKind::Star: return star_graph(spec.s);
    }
    throw std::logic_error("family: unknown kind");
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t j = i;
        for (const char* p = w; *p; ++p, ++j)
            if (j >= s.size() || s[j] != *p) return false;
        i = j;
        return true;
    }
    int number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("family DSL: expected integer in '" + s + "'");
        return std::stoi(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

// "<b>*K1" or "<b>K1" or bare "K1".
int isolated_count(Cursor& c) {
    c.skip_ws();
    int b = 1;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        b = c.number();
        c.eat('*');
    }
    if (!c.eat_word("K1")) throw std::invalid_argument("family DSL: expected K1 in '" + c.s + "'");
    return b;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    Cursor c{text};
    if (!c.eat('K')) throw std::invalid_argument("family DSL: expected K in '" + text + "'");
    int s = c.number();
    if (c.eat(',')) {
        int leaves = c.number();
        if (!c.done() || s != 1)
            throw std::invalid_argument("family DSL: star must be K1,<leaves>");
        return FamilySpec::star(leaves + 1);
    }
    if (c.done()) return FamilySpec::complete(s);
    if (!c.eat_word("v")) throw std::invalid_argument("family DSL: expected 'v' in '" + text + "'");
    if (c.eat('(')) {
        if (!c.eat('K')) throw std::invalid_argument("family DSL: expected K in '" + text + "'");
        int a = c.number();
        if (!c.eat('+')) throw std::invalid_argument("family DSL: expected + in '" + text + "'");
        int b = isolated_count(c);
        if (!c.eat(')') || !c.done())
            throw std::invalid_argument("family DSL: malformed '" + text + "'");
        return FamilySpec::join_family(s, a, b);
    }
    int b = isolated_count(c);
    if (!c.done()) throw std::invalid_argument("family DSL: trailing input in '" + text + "'");
    return FamilySpec::split_like(s, b);
}

long long edge_count_formula(int s, int n, EdgeFormulaVariant variant,
                             bool allow_outside_domain) {
    const bool odd_case = variant == EdgeFormulaVariant::OddCase;
    if (!allow_outside_domain) {
        int hi = odd_case ? (n - 3) / 2 : (n - 4) / 2;
        if (s < 1 || s > hi) throw std::domain_error("edge_count_formula: s outside 1..(n-3)/2");
    }
    long long clique = odd_case ? n - 2LL * s : n - 2LL * s - 1;
    if (clique < 0 && !allow_outside_domain)
        throw std::domain_error("edge_count_formula: negative clique part");
    long long value = choose2(s) + static_cast<long long>(s) * (n - s) + choose2(clique);
    long long closed = odd_case
        ? (3LL * s * s + (1 - 2LL * n) * s + static_cast<long long>(n) * (n - 1)) / 2
        : (3LL * s * s + 5LL * s - 2LL * s * n + static_cast<long long>(n) * n - 3LL * n + 2) / 2;
    if (clique >= 0 && value != closed)
        throw std::logic_error("edge_count_formula: closed-form mismatch");
    return value;
}

std::vector<std::pair<FamilySpec, long long>> compare_exceptions(int n) {
    if (n < 3) throw std::invalid_argument("compare_exceptions: need n >= 3");
    auto edges_of = [](const FamilySpec& f) { return static_cast<long long>(build(f).m); };
    FamilySpec universal = FamilySpec::join_family(1, n - 2, 1);
    FamilySpec split = FamilySpec::split_like(n / 2, n - n / 2);
    std::vector<std::pair<FamilySpec, long long>> out{
        {universal, edges_of(universal)}, {split, edges_of(split)}};
    long long gap = out[0].second - out[1].second;
    long long expected = (n % 2 == 1) ? static_cast<long long>(n - 3) * (n - 5) / 8
                                      : static_cast<long long>(n - 2) * (n - 8) / 8;
    if (gap != expected) throw std::logic_error("compare_exceptions: gap formula mismatch");
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    return out;
}

bool lemma4_check(int s, const std::vector<int>& parts, int p) {
    const int t = static_cast<int>(parts.size());
    if (s < 0 || p < 1 || t < 2) throw std::invalid_argument("lemma4_check: need t >= 2, p >= 1");
    for (int i = 0; i + 1 < t; ++i)
        if (parts[static_cast<std::size_t>(i)] < parts[static_cast<std::size_t>(i) + 1])
            throw std::invalid_argument("lemma4_check: parts must be nonincreasing");
    if (parts.back() < p) throw std::invalid_argument("lemma4_check: need n_t >= p");
    long long n = s + std::accumulate(parts.begin(), parts.end(), 0LL);
    long long big = n - s - static_cast<long long>(p) * (t - 1);
    if (parts.front() >= big)
        throw std::invalid_argument("lemma4_check: need n_1 < n - s - p(t-1)");
    long long lhs = choose2(s) + static_cast<long long>(s) * (n - s);
    for (int ni : parts) lhs += choose2(ni);
    long long rhs = choose2(s) + static_cast<long long>(s) * (n - s) + choose2(big) +
                    static_cast<long long>(t - 1) * choose2(p);
    return lhs < rhs;
}

}  // namespace gfc
