#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdl/densest.hpp"
#include "mdl/graph.hpp"
#include "mdl/rational.hpp"
#include "mdl/report.hpp"

namespace mdl {

inline constexpr int kSpectrumGuardrail = 10;

struct SpectrumEntry {
    Rational density;
    SimpleGraph witness;  // canonical form
    std::string graph6;

    [[nodiscard]] int order() const { return witness.order(); }
};

/// Density-minimal graphs found by exhaustive search, sorted by density, then
/// vertex count, then graph6 of the canonical witness.
struct SpectrumReport {
    int max_n = 0;
    std::optional<Rational> cap;  // exclusive upper bound on density
    std::vector<SpectrumEntry> entries;
    std::int64_t examined = 0;

    /// Distinct densities, increasing.
    [[nodiscard]] std::vector<Rational> densities() const;
    /// Entries with density < 3/2.
    [[nodiscard]] std::vector<SpectrumEntry> below_threshold() const;
};

/// Every density-minimal graph with at most max_n vertices and density below
/// `cap` (when given). Density-minimal graphs are connected, so only connected
/// graphs are searched. Throws GuardrailExceeded above `guardrail`.
SpectrumReport enumerate_density_minimal(int max_n, std::optional<Rational> cap = std::nullopt,
                                         const MinorSearchOptions& options = {},
                                         int guardrail = kSpectrumGuardrail);

/// Value of a low-density family member, or nothing when the index is out of
/// range for that family.
enum class LowFamily { Tree, Friendship, FriendshipPrime, FriendshipDoublePrime };
Rational low_family_density(LowFamily family, int i);
/// Witness graph: path:i, friendship:i, f_prime:i, f_double_prime:i.
SimpleGraph low_family_witness(LowFamily family, int i);
/// Vertex count of the witness: i+1, 2i+1, 2i+2, 2i+3.
int low_family_order(LowFamily family, int i);
/// Smallest index accepted by the family (0 for trees, 1 otherwise).
int low_family_first(LowFamily family);
std::string low_family_name(LowFamily family);
inline constexpr LowFamily kLowFamilies[] = {LowFamily::Tree, LowFamily::Friendship, LowFamily::FriendshipPrime,
                                             LowFamily::FriendshipDoublePrime};

/// True iff r < 3/2 and r is i/(i+1), 3i/(2i+1), (3i+2)/(2i+2) or
/// (3i+4)/(2i+3) for a valid index i.
bool in_low_spectrum(const Rational& r);

/// The sorted union of the four families below 3/2, starting at the first
/// value >= `from`, `count` entries long. Below 1 only the trees contribute,
/// so a run starting under 1 never reaches 1.
std::vector<Rational> predicted_low_spectrum(int count, const Rational& from = Rational(0));

struct LowSpectrumOptions {
    int max_n = 8;
    /// Values removed from the predicted set (for negative controls).
    std::vector<Rational> drop;
    MinorSearchOptions search;
};

/// Passes iff every enumerated density-minimal density below 3/2 is predicted
/// and every predicted family witness with at most max_n vertices is found.
VerificationReport verify_low_density_classification(const LowSpectrumOptions& options);

/// Every biconnected rank-4 graph with at most max_n vertices has a minor of
/// density at least 3/2.
VerificationReport verify_rank4_lemma(int max_n, const MinorSearchOptions& options = {});

/// Rank-minimal biconnected graphs of rank 1..3 are exactly K3, the diamond,
/// K4, book:3 and the 4-vertex path plus an apex.
VerificationReport verify_rank_minimal_blocks();

/// The expected five, in the order above.
std::vector<SimpleGraph> expected_rank_minimal_blocks();

/// Smallest density-minimal density strictly above `threshold` among graphs
/// with at most max_n vertices. A bounded search, not a statement about the
/// true gap.
std::optional<Rational> next_density(const Rational& threshold, int max_n, const MinorSearchOptions& options = {});

struct FanCheckLimits {
    int max_base = 4;
    int max_shared = 2;
    int max_fan = 9;
};

/// densest_fan_minor agrees with densest_minor of the built fan for every
/// admissible (base, S, k) within the limits.
VerificationReport verify_fan_minimality(const FanCheckLimits& limits = {}, const MinorSearchOptions& options = {});

struct MultiCheckLimits {
    int max_n = 4;
    int max_m = 6;
    int random_sets = 500;
    std::uint64_t seed = 1;
};

/// Among connected multigraphs within the limits: density-minimal iff tree or
/// single vertex, closed-form densest minor equals the closure answer, rank
/// never increases under a minor step; random component families have an
/// integer or superparticular limiting density.
VerificationReport verify_multigraph_classification(const MultiCheckLimits& limits = {});

/// CSV with header density_num,density_den,witness_graph6,n,m.
std::string spectrum_to_csv(const SpectrumReport& report);
/// {max_n, cap, count, entries: [{density, graph6, n, m}]}
std::string spectrum_to_json(const SpectrumReport& report, int indent = 2);

}  // namespace mdl
