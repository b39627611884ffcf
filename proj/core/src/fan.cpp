#include "mdl/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mdl/canon.hpp"

namespace mdl {

namespace {

void check_spec(const FanSpec& spec) {
    const VertexMask all = spec.base.vertex_mask();
    if ((spec.shared & ~all) || spec.shared == all)
        throw FanHypothesisError(FanHypothesis::SharedNotProper, "shared set must be a proper subset of the base");
    if (spec.count < 1) throw InvalidArgument("fan count must be at least 1");
}

}  // namespace

long fan_order(const FanSpec& spec) {
    const long n = spec.base.order();
    const long s = std::popcount(spec.shared);
    return spec.count * (n - s) + s;
}

long fan_size(const FanSpec& spec) {
    const long m = spec.base.size();
    const long e_s = edges_within(spec.base, spec.shared);
    return spec.count * m - (spec.count - 1) * e_s;
}

SimpleGraph build_fan(const FanSpec& spec) {
    check_spec(spec);
    const long total = fan_order(spec);
    if (total > kMaxVertices) throw SizeOverflow("fan would have " + std::to_string(total) + " vertices (max 32)");

    const int n = spec.base.order();
    const std::vector<int> shared = mask_to_vector(spec.shared);
    const std::vector<int> own = mask_to_vector(spec.base.vertex_mask() & ~spec.shared);
    const int s = static_cast<int>(shared.size());
    const int p = static_cast<int>(own.size());

    // slot[copy][v] is the fan vertex for base vertex v in that copy.
    std::vector<std::vector<int>> slot(static_cast<std::size_t>(spec.count), std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < spec.count; ++j) {
        for (int i = 0; i < s; ++i) slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(shared[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < p; ++i)
            slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(own[static_cast<std::size_t>(i)])] = s + j * p + i;
    }
    SimpleGraph fan(static_cast<int>(total));
    for (const Edge& e : spec.base.edges())
        for (int j = 0; j < spec.count; ++j)
            fan.add_edge(slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(e.u)], slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(e.v)]);
    return fan;
}

void check_fan_hypotheses(const SimpleGraph& g, VertexMask shared, bool require_clique) {
    const VertexMask all = g.vertex_mask();
    if ((shared & ~all) || shared == all)
        throw FanHypothesisError(FanHypothesis::SharedNotProper, "shared set must be a proper subset of the base");
    const VertexMask rest = all & ~shared;
    if (!induces_connected(g, rest))
        throw FanHypothesisError(FanHypothesis::RestDisconnected, "base minus the shared set is not connected");
    for (int v : mask_to_vector(shared))
        if (!(g.neighbors(v) & rest))
            throw FanHypothesisError(FanHypothesis::SharedWithoutOutside,
                                     "shared vertex " + std::to_string(v) + " has no neighbor outside the shared set");
    if (require_clique)
        for (int v : mask_to_vector(shared))
            if ((g.neighbors(v) & shared) != (shared & ~(VertexMask{1} << v)))
                throw FanHypothesisError(FanHypothesis::SharedNotClique, "shared set does not induce a clique");
}

namespace {

void grow_clique(const SimpleGraph& g, VertexMask candidates, VertexMask current, VertexMask& best) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
    for (int v : mask_to_vector(candidates)) {
        candidates &= ~(VertexMask{1} << v);
        grow_clique(g, candidates & g.neighbors(v), current | (VertexMask{1} << v), best);
    }
}

}  // namespace

CliqueCompletion clique_completion(const SimpleGraph& g, VertexMask shared) {
    check_fan_hypotheses(g, shared, false);
    VertexMask clique = 0;
    grow_clique(g, shared, 0, clique);
    CliqueCompletion out{g, std::popcount(shared) - std::popcount(clique)};
    const auto members = mask_to_vector(shared);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) out.completed.add_edge(members[i], members[j]);
    return out;
}

Rational tracked_fan_density(const TrackedMinor& t, int k) {
    if (t.shared_image == 0) return density(t.minor);
    const long n = t.minor.order();
    const long m = t.minor.size();
    const long s = std::popcount(t.shared_image);
    const long e_s = edges_within(t.minor, t.shared_image);
    return Rational(k * m - (k - 1) * e_s, k * (n - s) + s);
}

namespace {

std::vector<int> colors_of(const SimpleGraph& g, VertexMask shared) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
    for (int v : mask_to_vector(shared)) colors[static_cast<std::size_t>(v)] = 1;
    return colors;
}

VertexMask image_of(VertexMask shared, const std::vector<int>& vertex_map) {
    VertexMask out = 0;
    for (int v : mask_to_vector(shared))
        if (vertex_map[static_cast<std::size_t>(v)] >= 0) out |= VertexMask{1} << vertex_map[static_cast<std::size_t>(v)];
    return out;
}

VertexMask relabel_mask(VertexMask mask, const std::vector<int>& labeling) {
    VertexMask out = 0;
    for (int v : mask_to_vector(mask)) out |= VertexMask{1} << labeling[static_cast<std::size_t>(v)];
    return out;
}

}  // namespace

std::vector<TrackedMinor> tracked_minors(const SimpleGraph& base, VertexMask shared, int guardrail) {
    check_guardrail(base, guardrail);
    std::map<std::string, TrackedMinor> seen;
    std::deque<TrackedMinor> queue;
    auto admit = [&](const SimpleGraph& g, VertexMask s) {
        CanonicalForm cf = canonical_form(g, colors_of(g, s));
        if (seen.contains(cf.certificate)) return;
        TrackedMinor t{cf.graph, relabel_mask(s, cf.labeling)};
        seen.emplace(cf.certificate, t);
        queue.push_back(std::move(t));
    };
    admit(base, shared & base.vertex_mask());
    while (!queue.empty()) {
        TrackedMinor current = std::move(queue.front());
        queue.pop_front();
        for (const MinorStep& step : all_steps(current.minor)) {
            StepResult res = apply_step(current.minor, step);
            // Contracting into a shared vertex keeps the merged vertex shared.
            admit(res.graph, image_of(current.shared_image, res.vertex_map));
        }
    }
    std::vector<TrackedMinor> out;
    out.reserve(seen.size());
    for (auto& [cert, t] : seen) out.push_back(std::move(t));
    return out;
}

DensestFanMinor densest_fan_minor(const FanSpec& spec, int guardrail) {
    check_spec(spec);
    check_fan_hypotheses(spec.base, spec.shared, true);
    std::optional<DensestFanMinor> best;
    long best_order = 0;
    for (TrackedMinor& t : tracked_minors(spec.base, spec.shared, guardrail)) {
        Rational d = tracked_fan_density(t, spec.count);
        long order = t.shared_image == 0 ? t.minor.order()
                                         : fan_order(FanSpec{t.minor, t.shared_image, spec.count});
        // Candidates arrive in certificate order, so strict improvement keeps the smallest.
        if (!best || d > best->density || (d == best->density && order < best_order)) {
            best = DensestFanMinor{std::move(t), d};
            best_order = order;
        }
    }
    return *best;
}

ApexFan apex_fan(const SimpleGraph& g, int k) {
    if (k < 1) throw InvalidArgument("apex fan count must be at least 1");
    const int n = g.order();
    if (static_cast<long>(n) * k + 1 > kMaxVertices)
        throw SizeOverflow("apex fan would have " + std::to_string(static_cast<long>(n) * k + 1) + " vertices (max 32)");
    SimpleGraph with_apex(n + 1);
    for (const Edge& e : g.edges()) with_apex.add_edge(e.u, e.v);
    for (int v = 0; v < n; ++v) with_apex.add_edge(v, n);
    const long m = g.size();
    return {build_fan(FanSpec{with_apex, VertexMask{1} << n, k}), Rational((m + n) * k, static_cast<long>(n) * k + 1)};
}

Rational component_family_limiting_density(const SimpleGraph& g, const MinorSearchOptions& options) {
    return densest_minor_rank(g, options).density;
}

}  // namespace mdl
