#pragma once

#include <span>
#include <string>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

/// Canonical labeling of a (optionally vertex-colored) graph.
///
/// `certificate` is the graph6 text of `graph`, followed by "|" and the color
/// sequence when colors were supplied. Two inputs get equal certificates iff
/// they are isomorphic (color-preservingly, when colored).
struct CanonicalForm {
    std::string certificate;
    SimpleGraph graph;
    /// labeling[v] is the canonical position of input vertex v.
    std::vector<int> labeling;
};

CanonicalForm canonical_form(const SimpleGraph& g);

/// Colors are small nonnegative integers; isomorphisms must preserve them.
CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors);

/// Certificate only.
std::string certificate(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace mdl
