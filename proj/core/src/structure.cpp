#include "mdl/structure.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mdl/error.hpp"

namespace mdl {

namespace {

struct BlockSearch {
    const SimpleGraph& g;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    int timer = 0;
    std::vector<Edge> stack{};
    BlockDecomposition out{};

    void visit(int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++timer;
        int children = 0;
        for (int w : mask_to_vector(g.neighbors(v))) {
            auto& dw = disc[static_cast<std::size_t>(w)];
            auto& lv = low[static_cast<std::size_t>(v)];
            if (dw == 0) {
                ++children;
                stack.emplace_back(v, w);
                visit(w, v);
                lv = std::min(lv, low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    if (parent >= 0) out.articulation |= VertexMask{1} << v;
                    VertexMask block = 0;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
                        if (e == Edge(v, w)) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (w != parent && dw < disc[static_cast<std::size_t>(v)]) {
                stack.emplace_back(v, w);
                lv = std::min(lv, dw);
            }
        }
        if (parent < 0 && children > 1) out.articulation |= VertexMask{1} << v;
    }
};

}  // namespace

BlockDecomposition blocks(const SimpleGraph& g) {
    BlockSearch search{g};
    for (int v = 0; v < g.order(); ++v)
        if (search.disc[static_cast<std::size_t>(v)] == 0) search.visit(v, -1);
    std::sort(search.out.blocks.begin(), search.out.blocks.end());
    return search.out;
}

VertexMask articulation_points(const SimpleGraph& g) { return blocks(g).articulation; }

bool is_biconnected(const SimpleGraph& g) {
    return g.order() >= 3 && is_connected(g) && articulation_points(g) == 0;
}

std::vector<Edge> Ear::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
    return out;
}

EarDecomposition ear_decomposition(const SimpleGraph& g) {
    if (!is_biconnected(g)) throw InvalidArgument("ear decomposition needs a biconnected graph");

    EarDecomposition out;
    const int n = g.order();

    // Initial cycle: edge 0-w closed by a shortest path from w back to 0 avoiding the edge.
    int w0 = std::countr_zero(g.neighbors(0));
    {
        std::array<int, kMaxVertices> prev{};
        prev.fill(-1);
        VertexMask seen = (VertexMask{1} << w0);
        std::vector<int> queue{w0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int x : mask_to_vector(g.neighbors(v) & ~seen)) {
                if (v == w0 && x == 0) continue;
                seen |= VertexMask{1} << x;
                prev[static_cast<std::size_t>(x)] = v;
                queue.push_back(x);
            }
        }
        Ear cycle;
        for (int v = 0; v != -1; v = prev[static_cast<std::size_t>(v)]) cycle.vertices.push_back(v);
        cycle.vertices.push_back(0);
        std::reverse(cycle.vertices.begin(), cycle.vertices.end());
        // Walk reads 0, w0, ..., 0 after reversing the predecessor chain.
        out.ears.push_back(std::move(cycle));
    }

    SimpleGraph covered(n);
    VertexMask covered_vertices = 0;
    for (const Edge& e : out.ears.front().edges()) {
        covered.add_edge(e.u, e.v);
        covered_vertices |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    }

    const int total = g.size();
    while (covered.size() < total) {
        // Find an uncovered edge leaving the covered part.
        int u = -1;
        int x = -1;
        for (int v : mask_to_vector(covered_vertices)) {
            VertexMask open = g.neighbors(v) & ~covered.neighbors(v);
            if (open) {
                u = v;
                x = std::countr_zero(open);
                break;
            }
        }
        Ear ear;
        ear.vertices.push_back(u);
        if ((covered_vertices >> x) & 1u) {
            ear.vertices.push_back(x);
        } else {
            // Route from x through fresh vertices to a covered vertex other than u.
            std::array<int, kMaxVertices> prev{};
            prev.fill(-1);
            VertexMask seen = (VertexMask{1} << x) | (VertexMask{1} << u);
            std::vector<int> queue{x};
            int target = -1;
            for (std::size_t head = 0; head < queue.size() && target < 0; ++head) {
                int v = queue[head];
                for (int y : mask_to_vector(g.neighbors(v) & ~seen)) {
                    prev[static_cast<std::size_t>(y)] = v;
                    if ((covered_vertices >> y) & 1u) {
                        target = y;
                        break;
                    }
                    seen |= VertexMask{1} << y;
                    queue.push_back(y);
                }
            }
            std::vector<int> tail;
            for (int v = target; v != -1; v = prev[static_cast<std::size_t>(v)]) tail.push_back(v);
            ear.vertices.insert(ear.vertices.end(), tail.rbegin(), tail.rend());
        }
        for (const Edge& e : ear.edges()) {
            covered.add_edge(e.u, e.v);
            covered_vertices |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        }
        out.ears.push_back(std::move(ear));
    }
    return out;
}

bool is_valid_ear_decomposition(const SimpleGraph& g, const EarDecomposition& d) {
    if (d.ears.empty()) return false;
    std::set<Edge> seen_edges;
    VertexMask earlier = 0;
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
        const auto& walk = d.ears[i].vertices;
        if (walk.size() < 2) return false;
        for (int v : walk)
            if (v < 0 || v >= g.order()) return false;
        if (i == 0) {
            if (walk.size() < 4 || walk.front() != walk.back()) return false;
            std::set<int> distinct(walk.begin(), walk.end() - 1);
            if (distinct.size() != walk.size() - 1) return false;
        } else {
            if (walk.front() == walk.back()) return false;
            std::set<int> distinct(walk.begin(), walk.end());
            if (distinct.size() != walk.size()) return false;
            if (!((earlier >> walk.front()) & 1u) || !((earlier >> walk.back()) & 1u)) return false;
            for (std::size_t j = 1; j + 1 < walk.size(); ++j)
                if ((earlier >> walk[j]) & 1u) return false;
        }
        for (const Edge& e : d.ears[i].edges()) {
            if (!g.has_edge(e.u, e.v)) return false;
            if (!seen_edges.insert(e).second) return false;
        }
        for (int v : walk) earlier |= VertexMask{1} << v;
    }
    return static_cast<int>(seen_edges.size()) == g.size() && earlier == g.vertex_mask();
}

}  // namespace mdl
