// Independent reference implementations used only by the tests. None of them
// share code with the library beyond SimpleGraph itself.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "mdl/graph.hpp"

namespace oracle {

using mdl::SimpleGraph;

// Edge set as a bit vector over pairs (i<j) in row order.
inline std::uint64_t pair_code(const SimpleGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
    return code;
}

// Smallest pair code over all vertex orders; n <= 8.
inline std::uint64_t brute_canonical(const SimpleGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, pair_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return brute_canonical(a) == brute_canonical(b);
}

inline bool brute_connected(const SimpleGraph& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.order(); ++w)
            if (g.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

// Every labeled graph on n vertices (n <= 7).
inline void for_each_labeled(int n, const std::function<void(const SimpleGraph&)>& visit) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        SimpleGraph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((bits >> k) & 1u) g.add_edge(pairs[k].first, pairs[k].second);
        visit(g);
    }
}

// Isomorphism classes among labeled graphs on n vertices passing `keep`.
inline std::set<std::uint64_t> labeled_classes(int n, const std::function<bool(const SimpleGraph&)>& keep) {
    std::set<std::uint64_t> classes;
    for_each_labeled(n, [&](const SimpleGraph& g) {
        if (keep(g)) classes.insert(brute_canonical(g));
    });
    return classes;
}

// Number of unlabeled graphs on n vertices by Burnside over cycle types.
inline std::int64_t polya_graph_count(int n) {
    std::int64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::int64_t total = 0;  // sum of (n!/z) * 2^orbits, divided by n! at the end
    std::vector<int> parts;
    std::function<void(int, int)> walk = [&](int left, int max_part) {
        if (left == 0) {
            std::int64_t orbits = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                orbits += parts[i] / 2;
                for (std::size_t j = i + 1; j < parts.size(); ++j) orbits += std::gcd(parts[i], parts[j]);
            }
            std::int64_t z = 1;
            for (int len = 1; len <= n; ++len) {
                int mult = static_cast<int>(std::count(parts.begin(), parts.end(), len));
                for (int t = 0; t < mult; ++t) z *= len * (t + 1);
            }
            total += factorial / z * (std::int64_t{1} << orbits);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            walk(left - p, p);
            parts.pop_back();
        }
    };
    walk(n, n);
    return total / factorial;
}

// Connected counts from all-graph counts by the inverse Euler transform.
inline std::vector<std::int64_t> connected_counts(int max_n) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(max_n + 1)), b(a.size()), c(a.size());
    a[0] = 1;
    for (int n = 1; n <= max_n; ++n) a[static_cast<std::size_t>(n)] = polya_graph_count(n);
    for (int n = 1; n <= max_n; ++n) {
        std::int64_t s = n * a[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k) s -= b[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k)];
        b[static_cast<std::size_t>(n)] = s;
        std::int64_t d_sum = 0;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) d_sum += d * c[static_cast<std::size_t>(d)];
        c[static_cast<std::size_t>(n)] = (s - d_sum) / n;
    }
    return c;
}

// Every minor of g as brute canonical codes keyed with vertex count, by
// exhaustive one-step closure written independently of the library.
inline SimpleGraph contract(const SimpleGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    SimpleGraph out(g.order() - 1);
    auto to = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.has_edge(a, b) && to(a) != to(b) && !out.has_edge(to(a), to(b))) out.add_edge(to(a), to(b));
    return out;
}

inline SimpleGraph drop_vertex(const SimpleGraph& g, int v) {
    SimpleGraph out(g.order() - 1);
    auto to = [&](int w) { return w > v ? w - 1 : w; };
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (a != v && b != v && g.has_edge(a, b)) out.add_edge(to(a), to(b));
    return out;
}

struct MinorKey {
    int n;
    std::uint64_t code;
    friend auto operator<=>(const MinorKey&, const MinorKey&) = default;
};

inline std::set<MinorKey> all_minors(const SimpleGraph& root) {
    std::set<MinorKey> seen;
    std::vector<SimpleGraph> stack{root};
    seen.insert({root.order(), brute_canonical(root)});
    while (!stack.empty()) {
        SimpleGraph g = stack.back();
        stack.pop_back();
        std::vector<SimpleGraph> next;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (g.has_edge(a, b)) {
                    SimpleGraph d = g;
                    d.remove_edge(a, b);
                    next.push_back(d);
                    next.push_back(contract(g, a, b));
                }
        if (g.order() > 1)
            for (int v = 0; v < g.order(); ++v) next.push_back(drop_vertex(g, v));
        for (SimpleGraph& m : next)
            if (seen.insert({m.order(), brute_canonical(m)}).second) stack.push_back(std::move(m));
    }
    return seen;
}

}  // namespace oracle
