#include "mdl/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "mdl/canon.hpp"
#include "mdl/error.hpp"
#include "mdl/structure.hpp"

namespace mdl {

int EnumerationFilter::edge_cap(int n) const {
    long cap = static_cast<long>(n) * (n - 1) / 2;
    if (max_edges) cap = std::min<long>(cap, *max_edges);
    if (max_density) {
        // Largest m with m/n <= cap (or < cap when strict).
        const Rational& d = *max_density;
        __int128 limit = static_cast<__int128>(d.num()) * n;
        long m = static_cast<long>(limit / d.den());
        if (strict_density && static_cast<__int128>(m) * d.den() == limit) --m;
        cap = std::min(cap, m);
    }
    if (exact_rank) {
        // rank = m - n + c with c >= 1 (exactly 1 when connected).
        cap = std::min<long>(cap, n - 1 + *exact_rank);
    }
    return static_cast<int>(std::max<long>(cap, -1));
}

bool EnumerationFilter::accepts(const SimpleGraph& g) const {
    const int n = g.order();
    if (n < min_n || n > max_n) return false;
    if (max_edges && g.size() > *max_edges) return false;
    if (max_density) {
        Rational d = density(g);
        if (strict_density ? d >= *max_density : d > *max_density) return false;
    }
    if (exact_rank && rank(g) != *exact_rank) return false;
    switch (connectivity) {
        case Connectivity::Any: break;
        case Connectivity::Connected:
            if (!is_connected(g)) return false;
            break;
        case Connectivity::Biconnected:
            if (!is_biconnected(g)) return false;
            break;
    }
    return true;
}

namespace {

void validate(const EnumerationFilter& f) {
    if (f.max_n > kEnumerationGuardrail)
        throw GuardrailExceeded("enumeration max_n " + std::to_string(f.max_n) + " exceeds guardrail " +
                                std::to_string(kEnumerationGuardrail));
    if (f.max_n < 1 || f.min_n < 1) throw InvalidArgument("enumeration bounds must be positive");
    if (f.max_edges && *f.max_edges < 0) throw InvalidArgument("max_edges must be nonnegative");
    if (f.exact_rank && *f.exact_rank < 0) throw InvalidArgument("exact_rank must be nonnegative");
    if (f.max_density && *f.max_density < Rational(0)) throw InvalidArgument("max_density must be nonnegative");
}

// The vertex a child must have been grown from: in connected mode a non-cut
// vertex of least degree among non-cut vertices, otherwise a vertex of least
// degree. Removing it leaves a graph of the previous level, so every class is
// reached; the check trims most duplicate extensions before canonization.
bool grown_from_allowed_vertex(const SimpleGraph& child, int fresh, bool connected) {
    const int d = child.degree(fresh);
    VertexMask candidates = child.vertex_mask();
    if (connected) {
        const VertexMask cut = articulation_points(child);
        if ((cut >> fresh) & 1u) return false;
        candidates &= ~cut;
    }
    for (int v : mask_to_vector(candidates))
        if (child.degree(v) < d) return false;
    return true;
}

}  // namespace

void for_each_graph(const EnumerationFilter& filter, const std::function<void(const SimpleGraph&)>& visit) {
    validate(filter);
    const bool connected = filter.connectivity != Connectivity::Any;
    const int top = filter.max_n;

    // Edge budgets per level: outputs need edge_cap(n); parents of level n+1
    // lose at least one edge (connected) or none (any) with the removed vertex.
    std::vector<int> need(static_cast<std::size_t>(top + 2), -1);
    const int drop = connected ? 1 : 0;
    for (int n = top; n >= 1; --n) {
        int own = n >= filter.min_n ? filter.edge_cap(n) : -1;
        int from_child = n < top ? need[static_cast<std::size_t>(n + 1)] - drop : -1;
        need[static_cast<std::size_t>(n)] = std::min(std::max(own, from_child), n * (n - 1) / 2);
    }

    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int n = 1; n <= top; ++n) {
        if (n > 1) {
            std::unordered_set<std::string> seen;
            std::vector<std::pair<std::string, SimpleGraph>> next;
            const int cap = need[static_cast<std::size_t>(n)];
            const int fresh = n - 1;
            for (const SimpleGraph& parent : level) {
                const int room = cap - parent.size();
                if (room < (connected ? 1 : 0)) continue;
                const VertexMask all = parent.vertex_mask();
                for (VertexMask nb = 0;; nb = (nb - all) & all) {
                    // Submasks of `all` in increasing order, starting at 0.
                    const int d = std::popcount(nb);
                    if (d <= room && (d > 0 || !connected)) {
                        SimpleGraph child(n);
                        for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
                        for (int v : mask_to_vector(nb)) child.add_edge(v, fresh);
                        if (grown_from_allowed_vertex(child, fresh, connected)) {
                            CanonicalForm cf = canonical_form(child);
                            if (seen.insert(cf.certificate).second) next.emplace_back(cf.certificate, cf.graph);
                        }
                    }
                    if (nb == all) break;
                }
            }
            std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            level.clear();
            for (auto& item : next) level.push_back(std::move(item.second));
        }
        if (n >= filter.min_n)
            for (const SimpleGraph& g : level)
                if (filter.accepts(g)) visit(g);
    }
}

std::vector<SimpleGraph> enumerate(const EnumerationFilter& filter) {
    std::vector<SimpleGraph> out;
    for_each_graph(filter, [&](const SimpleGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace mdl
