#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdl/graph.hpp"
#include "mdl/minor.hpp"
#include "mdl/rational.hpp"

namespace mdl {

inline constexpr int kDefaultMinorGuardrail = 10;

/// Ranking used to pick a densest minor: higher density first, then fewer
/// vertices, then the smaller canonical certificate.
struct MinorRank {
    Rational density;
    int order = 1;
    std::string certificate;

    [[nodiscard]] bool better_than(const MinorRank& other) const;
    friend bool operator==(const MinorRank&, const MinorRank&) = default;
};

/// Memo entry for one canonical graph: the best minor in its closure and the
/// first step toward it (relative to the canonical labeling), or none when
/// the graph is its own best minor.
struct DensestEntry {
    MinorRank best;
    std::optional<MinorStep> step;
};

/// Densest-minor memo keyed by canonical certificate.
///
/// Insert-if-absent under a lock. Concurrent writers of the same key always
/// compute the same value, so whichever insert lands first is kept.
class DensestMemo {
public:
    std::optional<DensestEntry> find(const std::string& cert) const;
    void insert(const std::string& cert, const DensestEntry& entry);
    [[nodiscard]] std::size_t size() const;
    void clear();

    /// One line per entry; deterministic order.
    void save(const std::filesystem::path& path) const;
    /// Loads a cache written by save(). Returns false (leaving the memo
    /// empty) when the file is missing or corrupt.
    bool load(const std::filesystem::path& path);

    /// Session-wide table used when no explicit memo is passed.
    static DensestMemo& global();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, DensestEntry> table_;
};

enum class DensestBackend {
    Closure,     // fixed point over one-step minors, memoized by canonical form
    BranchSets,  // quotients of connected partitions of vertex subsets
};

struct MinorSearchOptions {
    DensestBackend backend = DensestBackend::Closure;
    int guardrail = kDefaultMinorGuardrail;
    DensestMemo* memo = nullptr;  // nullptr selects DensestMemo::global()
};

struct DensestMinor {
    SimpleGraph minor;
    Rational density;
    MinorWitness witness;
};

/// Densest minor of g (possibly g itself), ties broken by MinorRank.
DensestMinor densest_minor(const SimpleGraph& g, const MinorSearchOptions& options = {});

/// Rank of the best minor without building a witness.
MinorRank densest_minor_rank(const SimpleGraph& g, const MinorSearchOptions& options = {});

/// Best proper minor, or nothing for K1 (which has none).
std::optional<DensestMinor> best_proper_minor(const SimpleGraph& g, const MinorSearchOptions& options = {});

struct MinimalityCertificate {
    SimpleGraph subject;
    bool verdict = false;
    Rational subject_density;
    std::optional<DensestMinor> best_proper_minor;
};

/// Density-minimal: every proper minor is strictly sparser.
MinimalityCertificate is_density_minimal(const SimpleGraph& g, const MinorSearchOptions& options = {});

/// Verdict only; stops at the first proper minor that is at least as dense.
bool density_minimal(const SimpleGraph& g, const MinorSearchOptions& options = {});

/// Rank-minimal: no one-step minor keeps the cycle rank.
bool is_rank_minimal(const SimpleGraph& g);

/// All minors of a root graph, by canonical certificate, with each member's
/// densest-minor density.
struct MinorClosure {
    std::string root;
    std::map<std::string, Rational> members;

    [[nodiscard]] bool contains(const std::string& cert) const { return members.contains(cert); }
};

MinorClosure minor_closure(const SimpleGraph& g, const MinorSearchOptions& options = {});

/// Throws GuardrailExceeded when g.order() > limit.
void check_guardrail(const SimpleGraph& g, int limit);

}  // namespace mdl
