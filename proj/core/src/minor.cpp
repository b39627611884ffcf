#include "mdl/minor.hpp"

#include <algorithm>
#include <set>

#include "mdl/error.hpp"

namespace mdl {

bool is_valid_witness(const SimpleGraph& minor, const SimpleGraph& host, const MinorWitness& witness) {
    if (static_cast<int>(witness.branch_sets.size()) != minor.order()) return false;
    VertexMask used = 0;
    for (VertexMask set : witness.branch_sets) {
        if (set == 0 || (set & ~host.vertex_mask()) || (set & used)) return false;
        if (!induces_connected(host, set)) return false;
        used |= set;
    }
    for (const Edge& e : minor.edges()) {
        VertexMask around = 0;
        for (int v : mask_to_vector(witness.branch_sets[static_cast<std::size_t>(e.u)])) around |= host.neighbors(v);
        if (!(around & witness.branch_sets[static_cast<std::size_t>(e.v)])) return false;
    }
    return true;
}

StepResult apply_step(const SimpleGraph& g, const MinorStep& step) {
    const int n = g.order();
    StepResult out{SimpleGraph(1), std::vector<int>(static_cast<std::size_t>(n), -1)};
    switch (step.kind) {
        case MinorStep::Kind::DeleteEdge: {
            if (!g.has_edge(step.a, step.b)) throw InvalidArgument("edge is not present");
            out.graph = g;
            out.graph.remove_edge(step.a, step.b);
            for (int v = 0; v < n; ++v) out.vertex_map[static_cast<std::size_t>(v)] = v;
            return out;
        }
        case MinorStep::Kind::DeleteVertex: {
            if (step.a < 0 || step.a >= n) throw InvalidArgument("vertex is not present");
            if (n == 1) throw InvalidArgument("cannot delete the last vertex");
            for (int v = 0; v < n; ++v)
                out.vertex_map[static_cast<std::size_t>(v)] = v < step.a ? v : (v == step.a ? -1 : v - 1);
            out.graph = g.induced(g.vertex_mask() & ~(VertexMask{1} << step.a));
            return out;
        }
        case MinorStep::Kind::ContractEdge: {
            if (!g.has_edge(step.a, step.b)) throw InvalidArgument("edge is not present");
            const Edge e(step.a, step.b);
            for (int v = 0; v < n; ++v)
                out.vertex_map[static_cast<std::size_t>(v)] = v < e.v ? v : (v == e.v ? e.u : v - 1);
            SimpleGraph merged(n - 1);
            for (const Edge& f : g.edges()) {
                int x = out.vertex_map[static_cast<std::size_t>(f.u)];
                int y = out.vertex_map[static_cast<std::size_t>(f.v)];
                if (x != y) merged.add_edge(x, y);
            }
            out.graph = merged;
            return out;
        }
    }
    throw InvalidArgument("unknown minor step");
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
    return apply_step(g, {MinorStep::Kind::ContractEdge, e.u, e.v}).graph;
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
    return apply_step(g, {MinorStep::Kind::DeleteEdge, e.u, e.v}).graph;
}

SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
    return apply_step(g, {MinorStep::Kind::DeleteVertex, v, 0}).graph;
}

std::vector<MinorStep> all_steps(const SimpleGraph& g) {
    std::vector<MinorStep> steps;
    const auto edges = g.edges();
    for (const Edge& e : edges) steps.push_back({MinorStep::Kind::DeleteEdge, e.u, e.v});
    for (const Edge& e : edges) steps.push_back({MinorStep::Kind::ContractEdge, e.u, e.v});
    if (g.order() > 1)
        for (int v = 0; v < g.order(); ++v) steps.push_back({MinorStep::Kind::DeleteVertex, v, 0});
    return steps;
}

std::vector<CanonicalForm> one_step_minors(const SimpleGraph& g) {
    std::vector<CanonicalForm> out;
    std::set<std::string> seen;
    for (const MinorStep& step : all_steps(g)) {
        CanonicalForm cf = canonical_form(apply_step(g, step).graph);
        if (seen.insert(cf.certificate).second) out.push_back(std::move(cf));
    }
    std::sort(out.begin(), out.end(),
              [](const CanonicalForm& a, const CanonicalForm& b) { return a.certificate < b.certificate; });
    return out;
}

std::vector<VertexMask> push_branch_sets(const std::vector<VertexMask>& sets, const StepResult& step) {
    std::vector<VertexMask> next(static_cast<std::size_t>(step.graph.order()), 0);
    for (std::size_t v = 0; v < sets.size(); ++v) {
        int to = step.vertex_map[v];
        if (to >= 0) next[static_cast<std::size_t>(to)] |= sets[v];
    }
    return next;
}

namespace {

// Looks for a bijection from H onto the quotient Q (same order) carrying
// edges to edges.
class SpanningEmbedding {
public:
    SpanningEmbedding(const SimpleGraph& h, const SimpleGraph& q) : h_(h), q_(q) {
        order_.resize(static_cast<std::size_t>(h.order()));
        for (int i = 0; i < h.order(); ++i) order_[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
        map_.assign(static_cast<std::size_t>(h.order()), -1);
    }

    bool find() { return place(0, 0); }
    [[nodiscard]] const std::vector<int>& mapping() const { return map_; }

private:
    bool place(std::size_t idx, VertexMask used) {
        if (idx == order_.size()) return true;
        const int x = order_[idx];
        VertexMask need = 0;  // images of already placed neighbors
        for (int y : mask_to_vector(h_.neighbors(x)))
            if (map_[static_cast<std::size_t>(y)] >= 0) need |= VertexMask{1} << map_[static_cast<std::size_t>(y)];
        for (int c = 0; c < q_.order(); ++c) {
            if ((used >> c) & 1u) continue;
            if (q_.degree(c) < h_.degree(x)) continue;
            if ((q_.neighbors(c) & need) != need) continue;
            map_[static_cast<std::size_t>(x)] = c;
            if (place(idx + 1, used | (VertexMask{1} << c))) return true;
            map_[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    }

    const SimpleGraph& h_;
    const SimpleGraph& q_;
    std::vector<int> order_;
    std::vector<int> map_;
};

class BranchSetSearch {
public:
    BranchSetSearch(const SimpleGraph& h, const SimpleGraph& g) : h_(h), g_(g), target_(h.order()) {
        std::vector<int> hd;
        for (int v = 0; v < h.order(); ++v) hd.push_back(h.degree(v));
        std::sort(hd.rbegin(), hd.rend());
        h_degrees_ = hd;
    }

    std::optional<MinorWitness> run() {
        assign(0, 0);
        return found_;
    }

private:
    void assign(int v, int k) {
        if (found_) return;
        const int n = g_.order();
        if (k + (n - v) < target_) return;
        if (v == n) {
            if (k == target_) evaluate(k);
            return;
        }
        // v joins an existing block, opens a new one, or is deleted.
        for (int i = 0; i < k && !found_; ++i) {
            blocks_[static_cast<std::size_t>(i)] |= VertexMask{1} << v;
            assign(v + 1, k);
            blocks_[static_cast<std::size_t>(i)] &= ~(VertexMask{1} << v);
        }
        if (k < target_ && !found_) {
            blocks_[static_cast<std::size_t>(k)] = VertexMask{1} << v;
            assign(v + 1, k + 1);
            blocks_[static_cast<std::size_t>(k)] = 0;
        }
        if (!found_) assign(v + 1, k);
    }

    void evaluate(int k) {
        for (int i = 0; i < k; ++i)
            if (!induces_connected(g_, blocks_[static_cast<std::size_t>(i)])) return;
        SimpleGraph q(k);
        for (int i = 0; i < k; ++i) {
            VertexMask around = 0;
            for (int v : mask_to_vector(blocks_[static_cast<std::size_t>(i)])) around |= g_.neighbors(v);
            for (int j = i + 1; j < k; ++j)
                if (around & blocks_[static_cast<std::size_t>(j)]) q.add_edge(i, j);
        }
        if (q.size() < h_.size()) return;
        std::vector<int> qd;
        for (int v = 0; v < k; ++v) qd.push_back(q.degree(v));
        std::sort(qd.rbegin(), qd.rend());
        for (std::size_t i = 0; i < qd.size(); ++i)
            if (qd[i] < h_degrees_[i]) return;
        SpanningEmbedding embed(h_, q);
        if (!embed.find()) return;
        MinorWitness w;
        for (int x = 0; x < h_.order(); ++x)
            w.branch_sets.push_back(blocks_[static_cast<std::size_t>(embed.mapping()[static_cast<std::size_t>(x)])]);
        found_ = std::move(w);
    }

    const SimpleGraph& h_;
    const SimpleGraph& g_;
    const int target_;
    std::vector<int> h_degrees_;
    std::array<VertexMask, kMaxVertices> blocks_{};
    std::optional<MinorWitness> found_;
};

}  // namespace

std::optional<MinorWitness> is_minor(const SimpleGraph& h, const SimpleGraph& g) {
    if (h.order() > g.order() || h.size() > g.size() || rank(h) > rank(g)) return std::nullopt;
    auto witness = BranchSetSearch(h, g).run();
    if (witness && !is_valid_witness(h, g, *witness)) throw Error("internal error: invalid minor witness");
    return witness;
}

}  // namespace mdl
