#include "mdl/named.hpp"

#include <charconv>

#include "mdl/error.hpp"

namespace mdl {

namespace {

void expect_params(std::string_view name, std::span<const int> params, std::size_t count) {
    if (params.size() != count)
        throw InvalidArgument(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                              std::to_string(params.size()));
}

void expect_at_least(std::string_view name, int value, int low) {
    if (value < low)
        throw InvalidArgument(std::string(name) + " parameter must be >= " + std::to_string(low) + ", got " +
                              std::to_string(value));
}

SimpleGraph path(int k) {
    SimpleGraph g(k + 1);
    for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Vertex 0 is the hub; triangle j uses vertices 2j+1 and 2j+2.
SimpleGraph friendship(int i, int extra) {
    SimpleGraph g(2 * i + 1 + extra);
    for (int j = 0; j < i; ++j) {
        g.add_edge(0, 2 * j + 1);
        g.add_edge(0, 2 * j + 2);
        g.add_edge(2 * j + 1, 2 * j + 2);
    }
    return g;
}

SimpleGraph f_prime(int i) {
    SimpleGraph g = friendship(i, 1);
    const int x = 2 * i + 1;
    g.add_edge(x, 1);
    g.add_edge(x, 2);
    return g;
}

SimpleGraph f_double_prime(int i) {
    SimpleGraph g = friendship(i, 2);
    const int x = 2 * i + 1;
    const int y = 2 * i + 2;
    g.add_edge(x, 1);
    g.add_edge(x, 2);
    if (i >= 2) {
        // Outer edge of the second triangle.
        g.add_edge(y, 3);
        g.add_edge(y, 4);
    } else {
        // Hub edge of the only triangle.
        g.add_edge(y, 0);
        g.add_edge(y, 1);
    }
    return g;
}

SimpleGraph theta(int a, int b, int c) {
    int ones = (a == 1) + (b == 1) + (c == 1);
    if (ones > 1) throw InvalidArgument("theta graph with two length-1 paths would have a parallel edge");
    SimpleGraph g(2 + (a - 1) + (b - 1) + (c - 1));
    int next = 2;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

SimpleGraph cycle_of_triangles(int t) {
    SimpleGraph g(2 * t);
    for (int i = 0; i < t; ++i) {
        int a = i;
        int a_next = (i + 1) % t;
        g.add_edge(a, a_next);
        g.add_edge(t + i, a);
        g.add_edge(t + i, a_next);
    }
    return g;
}

SimpleGraph book(int k) {
    SimpleGraph g(k + 2);
    g.add_edge(0, 1);
    for (int j = 0; j < k; ++j) {
        g.add_edge(0, j + 2);
        g.add_edge(1, j + 2);
    }
    return g;
}

}  // namespace

SimpleGraph make_named(std::string_view name, std::span<const int> params) {
    auto p = [&](std::size_t i) { return params[i]; };
    if (name == "path") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 0);
        return path(p(0));
    }
    if (name == "cycle") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 3);
        return cycle(p(0));
    }
    if (name == "complete") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 1);
        return complete(p(0));
    }
    if (name == "complete_bipartite") {
        expect_params(name, params, 2);
        expect_at_least(name, p(0), 1);
        expect_at_least(name, p(1), 1);
        return complete_bipartite(p(0), p(1));
    }
    if (name == "empty") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 1);
        return SimpleGraph(p(0));
    }
    if (name == "star") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 0);
        SimpleGraph g(p(0) + 1);
        for (int leaf = 1; leaf <= p(0); ++leaf) g.add_edge(0, leaf);
        return g;
    }
    if (name == "friendship" || name == "f_prime" || name == "f_double_prime") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 1);
        if (name == "friendship") return friendship(p(0), 0);
        if (name == "f_prime") return f_prime(p(0));
        return f_double_prime(p(0));
    }
    if (name == "theta") {
        expect_params(name, params, 3);
        for (std::size_t i = 0; i < 3; ++i) expect_at_least(name, p(i), 1);
        return theta(p(0), p(1), p(2));
    }
    if (name == "diamond") {
        expect_params(name, params, 0);
        return book(2);
    }
    if (name == "cycle_of_triangles") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 3);
        return cycle_of_triangles(p(0));
    }
    if (name == "book") {
        expect_params(name, params, 1);
        expect_at_least(name, p(0), 1);
        return book(p(0));
    }
    throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

SimpleGraph make_named(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
                throw ParseError("bad parameter '" + std::string(item) + "' in '" + std::string(spec) + "'");
            params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return make_named(name, params);
}

std::vector<std::string> named_families() {
    return {"path",  "cycle", "complete", "complete_bipartite", "empty",   "star",
            "friendship", "f_prime", "f_double_prime", "theta", "diamond", "cycle_of_triangles",
            "book"};
}

}  // namespace mdl
