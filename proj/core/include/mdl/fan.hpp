#pragma once

#include <string>
#include <vector>

#include "mdl/densest.hpp"
#include "mdl/error.hpp"
#include "mdl/graph.hpp"
#include "mdl/rational.hpp"

namespace mdl {

/// k copies of `base` glued along one shared copy of the vertices in `shared`.
struct FanSpec {
    SimpleGraph base;
    VertexMask shared = 0;
    int count = 1;
};

/// Vertex count k(n-s)+s of the fan, computed without building it.
long fan_order(const FanSpec& spec);
/// Edge count k*m - (k-1)*e_S of the fan, computed without building it.
long fan_size(const FanSpec& spec);

/// Shared vertices come first (in increasing base order), then copy j of the
/// private vertices occupies a contiguous block. Throws InvalidArgument when
/// `shared` is not a proper subset or count < 1, SizeOverflow above 32 vertices.
SimpleGraph build_fan(const FanSpec& spec);

/// Which structural hypothesis on (G, S) failed.
enum class FanHypothesis {
    SharedNotProper,       // S must be a proper subset of V(G)
    RestDisconnected,      // G \ S must induce a connected subgraph
    SharedWithoutOutside,  // every vertex of S needs a neighbor outside S
    SharedNotClique,       // S must induce a clique
};

class FanHypothesisError : public InvalidArgument {
public:
    FanHypothesisError(FanHypothesis which, const std::string& what) : InvalidArgument(what), which_(which) {}
    [[nodiscard]] FanHypothesis which() const noexcept { return which_; }

private:
    FanHypothesis which_;
};

struct CliqueCompletion {
    SimpleGraph completed;  // G plus every missing edge inside S
    int c = 0;              // |S \ K| for K a maximum clique of G[S]
};

/// Requires G \ S connected and every S vertex adjacent to G \ S. The clique K
/// is the lexicographically first maximum clique; only its size matters.
CliqueCompletion clique_completion(const SimpleGraph& g, VertexMask shared);

/// A minor of the fan's base together with the image of the shared set.
struct TrackedMinor {
    SimpleGraph minor;
    VertexMask shared_image = 0;
};

/// Density of Fan(minor, shared_image, k) by formula; when the image is
/// empty this is the density of the minor alone.
Rational tracked_fan_density(const TrackedMinor& t, int k);

/// Every minor of `base` with its shared-set image, one per isomorphism class
/// of the marked graph, in certificate order. Guarded by `guardrail`.
std::vector<TrackedMinor> tracked_minors(const SimpleGraph& base, VertexMask shared,
                                         int guardrail = kDefaultMinorGuardrail);

struct DensestFanMinor {
    TrackedMinor tracked;
    Rational density;
};

/// Best Fan(G', S', k) over tracked minors (G', S') of the base: highest
/// density, then fewest fan vertices, then smallest certificate. Requires the
/// structural hypotheses (S a clique, G \ S connected, each S vertex with an
/// outside neighbor) and throws FanHypothesisError otherwise.
DensestFanMinor densest_fan_minor(const FanSpec& spec, int guardrail = kDefaultMinorGuardrail);

/// Checks the densest_fan_minor hypotheses; throws FanHypothesisError.
void check_fan_hypotheses(const SimpleGraph& g, VertexMask shared, bool require_clique);

struct ApexFan {
    SimpleGraph fan;
    Rational predicted_density;  // (m+n)k/(nk+1)
};

/// Fan(G + apex, {apex}, k) where the apex is joined to every vertex of G.
ApexFan apex_fan(const SimpleGraph& g, int k);

/// Largest density over all minors of G: the limiting density of the family
/// of graphs whose components are all minors of G.
Rational component_family_limiting_density(const SimpleGraph& g, const MinorSearchOptions& options = {});

}  // namespace mdl
