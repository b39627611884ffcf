#pragma once

#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

/// Maximal biconnected pieces (or bridges) plus the cut vertices joining them.
/// Isolated vertices belong to no block.
struct BlockDecomposition {
    std::vector<VertexMask> blocks;  // sorted ascending by mask
    VertexMask articulation = 0;
};

BlockDecomposition blocks(const SimpleGraph& g);

VertexMask articulation_points(const SimpleGraph& g);

/// Connected, at least three vertices, and no cut vertex.
bool is_biconnected(const SimpleGraph& g);

/// One ear of an open ear decomposition, as a vertex walk. The first ear is a
/// cycle and repeats its start vertex at the end; later ears are paths whose
/// two (distinct) endpoints lie on earlier ears.
struct Ear {
    std::vector<int> vertices;

    [[nodiscard]] std::vector<Edge> edges() const;
};

struct EarDecomposition {
    std::vector<Ear> ears;
};

/// Open ear decomposition of a biconnected graph; throws InvalidArgument otherwise.
EarDecomposition ear_decomposition(const SimpleGraph& g);

/// Checks every structural requirement of an open ear decomposition of `g`.
bool is_valid_ear_decomposition(const SimpleGraph& g, const EarDecomposition& d);

}  // namespace mdl
