#include "mdl/graph.hpp"

#include <algorithm>

#include "mdl/error.hpp"

namespace mdl {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("graph must have at least one vertex");
    if (n > kMaxVertices) throw SizeOverflow("graph has more than 32 vertices");
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<Edge> edges)
    : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

int SimpleGraph::size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
    return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        VertexMask higher = adj_[static_cast<std::size_t>(u)] & ~((VertexMask{2} << u) - 1);
        for (int v : mask_to_vector(higher)) out.emplace_back(u, v);
    }
    return out;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(VertexMask{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(VertexMask{1} << u);
}

SimpleGraph SimpleGraph::induced(VertexMask keep) const {
    keep &= vertex_mask();
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1u) index[static_cast<std::size_t>(v)] = k++;
    SimpleGraph out(k);
    for (int v = 0; v < n_; ++v) {
        if (!((keep >> v) & 1u)) continue;
        VertexMask row = 0;
        for (int w : mask_to_vector(adj_[static_cast<std::size_t>(v)] & keep))
            row |= VertexMask{1} << index[static_cast<std::size_t>(w)];
        out.adj_[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = row;
    }
    return out;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
    SimpleGraph out(n_);
    for (int v = 0; v < n_; ++v) {
        VertexMask row = 0;
        VertexMask nb = adj_[static_cast<std::size_t>(v)];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            row |= VertexMask{1} << perm[static_cast<std::size_t>(w)];
        }
        out.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
    }
    return out;
}

std::size_t SimpleGraph::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int v = 0; v < n_; ++v) h = h * 0x9E3779B97F4A7C15ull + adj_[static_cast<std::size_t>(v)];
    return h;
}

Rational density(const SimpleGraph& g) { return Rational(g.size(), g.order()); }

int rank(const SimpleGraph& g) { return g.size() - g.order() + component_count(g); }

VertexMask reach(const SimpleGraph& g, int start, VertexMask allowed) {
    VertexMask seen = VertexMask{1} << start;
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexMask> components(const SimpleGraph& g) {
    std::vector<VertexMask> out;
    VertexMask left = g.vertex_mask();
    while (left) {
        VertexMask comp = reach(g, std::countr_zero(left), left);
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

int component_count(const SimpleGraph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const SimpleGraph& g) { return reach(g, 0, g.vertex_mask()) == g.vertex_mask(); }

bool induces_connected(const SimpleGraph& g, VertexMask set) {
    if (set == 0) return false;
    return reach(g, std::countr_zero(set), set) == set;
}

int edges_within(const SimpleGraph& g, VertexMask set) {
    int twice = 0;
    VertexMask s = set;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        twice += std::popcount(g.neighbors(v) & set);
    }
    return twice / 2;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph out(a.order() + b.order());
    for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

std::vector<int> mask_to_vector(VertexMask mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

VertexMask vector_to_mask(std::span<const int> vertices) {
    VertexMask m = 0;
    for (int v : vertices) m |= VertexMask{1} << v;
    return m;
}

}  // namespace mdl
