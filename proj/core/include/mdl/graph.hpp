#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl {

/// Bit i set means vertex i is a member.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 32;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge() = default;
    constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Small labeled simple graph on vertices {0..n-1}, 1 <= n <= 32.
///
/// Adjacency is one 32-bit row per vertex. Loops and parallel edges are not
/// representable; add_edge rejects u == v.
class SimpleGraph {
public:
    explicit SimpleGraph(int n = 1);
    SimpleGraph(int n, std::span<const Edge> edges);
    SimpleGraph(int n, std::initializer_list<Edge> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] VertexMask vertex_mask() const noexcept {
        return n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    }

    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(int v) const { return std::popcount(neighbors(v)); }
    [[nodiscard]] std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    [[nodiscard]] SimpleGraph induced(VertexMask keep) const;
    /// Graph with vertex v renamed to perm[v]; perm must be a permutation.
    [[nodiscard]] SimpleGraph relabeled(std::span<const int> perm) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) noexcept {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    void check_vertex(int v) const;

    int n_ = 1;
    std::array<VertexMask, kMaxVertices> adj_{};
};

/// m/n in lowest terms.
Rational density(const SimpleGraph& g);

/// Cycle rank m - n + c, where c counts connected components.
int rank(const SimpleGraph& g);

int component_count(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexMask> components(const SimpleGraph& g);
/// Vertices reachable from `start` without leaving `allowed`.
VertexMask reach(const SimpleGraph& g, int start, VertexMask allowed);
/// True iff the subgraph induced by `set` is nonempty and connected.
bool induces_connected(const SimpleGraph& g, VertexMask set);
/// Edges with both ends in `set`.
int edges_within(const SimpleGraph& g, VertexMask set);

/// Disjoint union; vertices of `b` are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

std::vector<int> mask_to_vector(VertexMask mask);
VertexMask vector_to_mask(std::span<const int> vertices);

}  // namespace mdl

template <>
struct std::hash<mdl::SimpleGraph> {
    std::size_t operator()(const mdl::SimpleGraph& g) const noexcept { return g.hash(); }
};
