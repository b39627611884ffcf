#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

/// Builds a named family member.
///
/// Families and their parameters:
///   path:k                 path with k edges (k+1 vertices), k >= 0
///   cycle:n                n >= 3
///   complete:n             n >= 1
///   complete_bipartite:a,b a, b >= 1
///   empty:n                n isolated vertices
///   star:k                 K_{1,k}
///   friendship:i           i triangles sharing one vertex, i >= 1
///   f_prime:i              friendship:i plus a vertex across one triangle edge
///   f_double_prime:i       friendship:i plus two such vertices on distinct edges
///   theta:a,b,c            two poles joined by paths of lengths a, b, c; at most one equals 1
///   diamond                K4 minus an edge
///   cycle_of_triangles:t   cycle a_1..a_t, plus b_i adjacent to a_i and a_{i+1}, t >= 3
///   book:k                 k triangles sharing one edge
///
/// Throws InvalidArgument for unknown names or bad parameters.
SimpleGraph make_named(std::string_view name, std::span<const int> params);

/// Parses "name" or "name:p1,p2,..." and builds the graph.
SimpleGraph make_named(std::string_view spec);

/// Names accepted by make_named, in documentation order.
std::vector<std::string> named_families();

}  // namespace mdl
