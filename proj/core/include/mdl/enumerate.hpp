#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mdl/graph.hpp"
#include "mdl/rational.hpp"

namespace mdl {

inline constexpr int kEnumerationGuardrail = 12;

enum class Connectivity { Any, Connected, Biconnected };

/// Structural filter for isomorph-free enumeration. All bounds are inclusive
/// except max_density when strict_density is set.
struct EnumerationFilter {
    int max_n = 1;
    int min_n = 1;
    std::optional<int> max_edges;
    Connectivity connectivity = Connectivity::Any;
    std::optional<int> exact_rank;
    std::optional<Rational> max_density;
    bool strict_density = false;

    /// Edge budget for n-vertex outputs, from max_edges, max_density,
    /// exact_rank and the simple-graph limit n(n-1)/2.
    [[nodiscard]] int edge_cap(int n) const;
    [[nodiscard]] bool accepts(const SimpleGraph& g) const;
};

/// One representative per isomorphism class passing the filter, in canonical
/// form, ordered by certificate (so by vertex count first). Throws
/// GuardrailExceeded when max_n > 12 and InvalidArgument for a bad filter.
std::vector<SimpleGraph> enumerate(const EnumerationFilter& filter);

/// Streaming form: same graphs, same order, one vertex count at a time.
void for_each_graph(const EnumerationFilter& filter, const std::function<void(const SimpleGraph&)>& visit);

}  // namespace mdl
