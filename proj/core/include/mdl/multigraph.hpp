#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/densest.hpp"
#include "mdl/rational.hpp"

namespace mdl {

/// Guardrail for multigraph closure searches and brute-force canonical forms.
inline constexpr int kMultigraphGuardrail = 7;

/// Multigraph with bonds (parallel edges) and self-loops; n >= 1.
class Multigraph {
public:
    explicit Multigraph(int n = 1);

    [[nodiscard]] int order() const noexcept { return n_; }
    /// Total edges: every bond instance and every loop counts once.
    [[nodiscard]] int size() const noexcept;

    [[nodiscard]] int multiplicity(int u, int v) const;
    [[nodiscard]] int loops(int v) const;

    void add_edges(int u, int v, int count = 1);
    void add_loops(int v, int count = 1);

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    void check_vertex(int v) const;
    [[nodiscard]] std::size_t slot(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 1;
    std::vector<int> mult_;
    std::vector<int> loops_;
};

Rational mg_density(const Multigraph& g);
/// m - n + c.
int mg_rank(const Multigraph& g);
int mg_component_count(const Multigraph& g);
bool mg_is_connected(const Multigraph& g);
/// Vertex lists of connected components, ordered by smallest member.
std::vector<std::vector<int>> mg_components(const Multigraph& g);
/// Connected, loopless, bondless, m = n - 1.
bool mg_is_tree(const Multigraph& g);

/// Removes one instance of the u-v bond and merges v into u (u keeps its
/// slot; vertices above the larger endpoint shift down). Remaining u-v
/// instances become loops and all other multiplicities add. Loops cannot be
/// contracted: u == v throws InvalidArgument.
Multigraph mg_contract(const Multigraph& g, int u, int v);
Multigraph mg_delete_edge(const Multigraph& g, int u, int v);
Multigraph mg_delete_loop(const Multigraph& g, int v);
Multigraph mg_delete_vertex(const Multigraph& g, int v);

/// Every single-operation minor (edge-instance deletion, loop deletion,
/// contraction, vertex deletion), one per distinct operation.
std::vector<Multigraph> mg_one_step_minors(const Multigraph& g);

/// Certificate that is equal for isomorphic multigraphs, by trying every
/// vertex permutation. Throws GuardrailExceeded above kMultigraphGuardrail.
std::string mg_certificate(const Multigraph& g);

struct MgDensest {
    Multigraph minor;
    Rational density;
};

/// Closed form: a component with a cycle, loop or bond contracts to a single
/// vertex carrying rank-many loops; a forest keeps its largest tree.
MgDensest mg_densest_minor(const Multigraph& g);

/// Same answer by exhaustive closure over minors; guarded.
MgDensest mg_densest_minor_by_closure(const Multigraph& g, int guardrail = kMultigraphGuardrail);

/// No proper minor has equal or greater density; decided by closure.
bool mg_is_density_minimal(const Multigraph& g, int guardrail = kMultigraphGuardrail);

/// A component family given by generators: every component of a member is a
/// minor of some generator. `unbounded_bonds` marks a family declared to grow
/// bonds without limit, which has no finite limiting density.
struct MgFamilyDescriptor {
    std::vector<Multigraph> generators;
    bool unbounded_bonds = false;
};

struct MgFamilyDensity {
    bool unbounded = false;
    Rational value;
};

/// Max over generators of their densest-minor density; throws InvalidArgument
/// for an empty generator list.
MgFamilyDensity mg_component_family_density(const MgFamilyDescriptor& desc);

/// True iff r is a nonnegative integer or i/(i+1).
bool is_integer_or_superparticular(const Rational& r);

/// "n=<k>; u-v:mult, ...; loops v:count, ..." (a bare "u-v" means multiplicity 1).
Multigraph parse_multigraph(std::string_view text);
std::string format_multigraph(const Multigraph& g);

/// Lifts a simple graph to a multigraph with unit multiplicities.
Multigraph to_multigraph(const SimpleGraph& g);

/// All multigraphs with n <= max_n and m <= max_m up to isomorphism, in
/// certificate order; optionally connected only.
std::vector<Multigraph> enumerate_multigraphs(int max_n, int max_m, bool connected_only);

}  // namespace mdl
