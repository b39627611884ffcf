#include "mdl/densest.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "mdl/canon.hpp"
#include "mdl/error.hpp"

namespace mdl {

bool MinorRank::better_than(const MinorRank& other) const {
    if (density != other.density) return density > other.density;
    if (order != other.order) return order < other.order;
    return certificate < other.certificate;
}

// ---------------------------------------------------------------------------
// Memo

std::optional<DensestEntry> DensestMemo::find(const std::string& cert) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(cert);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void DensestMemo::insert(const std::string& cert, const DensestEntry& entry) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(cert, entry);
}

std::size_t DensestMemo::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void DensestMemo::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

DensestMemo& DensestMemo::global() {
    static DensestMemo memo;
    return memo;
}

namespace {

constexpr std::string_view kMemoHeader = "mdl-densest-memo v1";

std::string format_step(const std::optional<MinorStep>& step) {
    if (!step) return "-";
    switch (step->kind) {
        case MinorStep::Kind::DeleteEdge: return "E " + std::to_string(step->a) + " " + std::to_string(step->b);
        case MinorStep::Kind::DeleteVertex: return "V " + std::to_string(step->a);
        case MinorStep::Kind::ContractEdge: return "C " + std::to_string(step->a) + " " + std::to_string(step->b);
    }
    return "-";
}

std::optional<MinorStep> parse_step(const std::string& text) {
    if (text == "-") return std::nullopt;
    std::istringstream in(text);
    char kind = 0;
    MinorStep step;
    in >> kind >> step.a;
    if (kind == 'E' || kind == 'C') in >> step.b;
    if (!in || !in.eof()) throw ParseError("bad memo step '" + text + "'");
    if (kind == 'E') step.kind = MinorStep::Kind::DeleteEdge;
    else if (kind == 'V') step.kind = MinorStep::Kind::DeleteVertex;
    else if (kind == 'C') step.kind = MinorStep::Kind::ContractEdge;
    else throw ParseError("bad memo step '" + text + "'");
    return step;
}

}  // namespace

void DensestMemo::save(const std::filesystem::path& path) const {
    std::vector<std::pair<std::string, DensestEntry>> rows;
    {
        std::shared_lock lock(mutex_);
        rows.assign(table_.begin(), table_.end());
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ofstream out(path);
    if (!out) throw Error("cannot write memo cache " + path.string());
    out << kMemoHeader << '\n';
    for (const auto& [cert, entry] : rows)
        out << cert << '\t' << entry.best.density.str() << '\t' << entry.best.order << '\t'
            << entry.best.certificate << '\t' << format_step(entry.step) << '\n';
}

bool DensestMemo::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::unordered_map<std::string, DensestEntry> loaded;
    try {
        std::string line;
        if (!std::getline(in, line) || line != kMemoHeader) return false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::vector<std::string> fields;
            std::istringstream row(line);
            std::string field;
            while (std::getline(row, field, '\t')) fields.push_back(field);
            if (fields.size() != 5) return false;
            DensestEntry entry;
            entry.best.density = Rational::parse(fields[1]);
            entry.best.order = std::stoi(fields[2]);
            entry.best.certificate = fields[3];
            entry.step = parse_step(fields[4]);
            loaded.emplace(fields[0], std::move(entry));
        }
    } catch (const std::exception&) {
        return false;
    }
    std::unique_lock lock(mutex_);
    for (auto& [cert, entry] : loaded) table_.try_emplace(cert, std::move(entry));
    return true;
}

// ---------------------------------------------------------------------------
// Closure backend

void check_guardrail(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw GuardrailExceeded("graph has " + std::to_string(g.order()) + " vertices, guardrail is " +
                                std::to_string(limit));
}

namespace {

DensestMemo& memo_of(const MinorSearchOptions& options) {
    return options.memo ? *options.memo : DensestMemo::global();
}

// `canonical` must be the canonical graph whose certificate is `cert`.
MinorRank closure_best(const SimpleGraph& canonical, const std::string& cert, DensestMemo& memo) {
    if (auto hit = memo.find(cert)) return hit->best;
    DensestEntry entry{{density(canonical), canonical.order(), cert}, std::nullopt};
    for (const MinorStep& step : all_steps(canonical)) {
        CanonicalForm cf = canonical_form(apply_step(canonical, step).graph);
        MinorRank r = closure_best(cf.graph, cf.certificate, memo);
        if (r.better_than(entry.best)) {
            entry.best = std::move(r);
            entry.step = step;
        }
    }
    memo.insert(cert, entry);
    return entry.best;
}

MinorStep relabel_step(const MinorStep& step, const std::vector<int>& canonical_to_input) {
    return {step.kind, canonical_to_input[static_cast<std::size_t>(step.a)],
            step.kind == MinorStep::Kind::DeleteVertex ? 0 : canonical_to_input[static_cast<std::size_t>(step.b)]};
}

// Follows memo steps from `start` (with branch sets into the host) to the best minor.
DensestMinor follow_memo(SimpleGraph current, std::vector<VertexMask> sets, DensestMemo& memo) {
    while (true) {
        CanonicalForm cf = canonical_form(current);
        closure_best(cf.graph, cf.certificate, memo);
        auto entry = memo.find(cf.certificate);
        if (!entry->step) break;
        std::vector<int> inverse(cf.labeling.size());
        for (std::size_t v = 0; v < cf.labeling.size(); ++v) inverse[static_cast<std::size_t>(cf.labeling[v])] = static_cast<int>(v);
        StepResult res = apply_step(current, relabel_step(*entry->step, inverse));
        sets = push_branch_sets(sets, res);
        current = std::move(res.graph);
    }
    Rational d = density(current);
    return {std::move(current), d, MinorWitness{std::move(sets)}};
}

std::vector<VertexMask> singletons(const SimpleGraph& g) {
    std::vector<VertexMask> sets;
    for (int v = 0; v < g.order(); ++v) sets.push_back(VertexMask{1} << v);
    return sets;
}

// ---------------------------------------------------------------------------
// Branch-set backend

// Visits every partition of every vertex subset into blocks (blocks listed in
// order of their smallest vertex). The callback returns false to stop.
template <typename Visit>
class PartitionWalk {
public:
    PartitionWalk(int n, Visit& visit) : n_(n), visit_(visit) {}

    void run() { step(0, 0); }

private:
    bool step(int v, int k) {
        if (v == n_) return visit_(blocks_, k);
        for (int i = 0; i < k; ++i) {
            blocks_[static_cast<std::size_t>(i)] |= VertexMask{1} << v;
            bool go = step(v + 1, k);
            blocks_[static_cast<std::size_t>(i)] &= ~(VertexMask{1} << v);
            if (!go) return false;
        }
        blocks_[static_cast<std::size_t>(k)] = VertexMask{1} << v;
        bool go = step(v + 1, k + 1);
        blocks_[static_cast<std::size_t>(k)] = 0;
        if (!go) return false;
        return step(v + 1, k);
    }

    int n_;
    Visit& visit_;
    std::array<VertexMask, kMaxVertices> blocks_{};
};

// Edge count of the quotient, or -1 when some block is disconnected.
int quotient_edges(const SimpleGraph& g, const std::array<VertexMask, kMaxVertices>& blocks, int k) {
    std::array<VertexMask, kMaxVertices> around{};
    for (int i = 0; i < k; ++i) {
        VertexMask b = blocks[static_cast<std::size_t>(i)];
        if ((b & (b - 1)) && !induces_connected(g, b)) return -1;
        VertexMask nb = 0;
        VertexMask rest = b;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            nb |= g.neighbors(v);
        }
        around[static_cast<std::size_t>(i)] = nb;
    }
    int edges = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (around[static_cast<std::size_t>(i)] & blocks[static_cast<std::size_t>(j)]) ++edges;
    return edges;
}

SimpleGraph quotient(const SimpleGraph& g, const std::vector<VertexMask>& blocks) {
    SimpleGraph q(static_cast<int>(blocks.size()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        VertexMask nb = 0;
        for (int v : mask_to_vector(blocks[i])) nb |= g.neighbors(v);
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (nb & blocks[j]) q.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return q;
}

// Best quotient over partitions with at most max_blocks blocks.
std::optional<DensestMinor> branch_set_best(const SimpleGraph& g, int max_blocks) {
    Rational best_density(-1);
    int best_order = 0;
    std::vector<std::vector<VertexMask>> ties;
    auto visit = [&](const std::array<VertexMask, kMaxVertices>& blocks, int k) {
        if (k == 0 || k > max_blocks) return true;
        int e = quotient_edges(g, blocks, k);
        if (e < 0) return true;
        Rational d(e, k);
        if (d > best_density || (d == best_density && k < best_order)) {
            best_density = d;
            best_order = k;
            ties.clear();
        }
        if (d == best_density && k == best_order) ties.emplace_back(blocks.begin(), blocks.begin() + k);
        return true;
    };
    PartitionWalk<decltype(visit)> walk(g.order(), visit);
    walk.run();
    if (ties.empty()) return std::nullopt;

    std::optional<DensestMinor> best;
    std::string best_cert;
    for (auto& blocks : ties) {
        SimpleGraph q = quotient(g, blocks);
        std::string cert = certificate(q);
        if (!best || cert < best_cert) {
            best_cert = cert;
            Rational d = density(q);
            best = DensestMinor{std::move(q), d, MinorWitness{blocks}};
        }
    }
    return best;
}

MinorRank rank_of(const DensestMinor& d) { return {d.density, d.minor.order(), certificate(d.minor)}; }

// G minus one edge, choosing the smallest certificate among the deletions.
std::optional<DensestMinor> best_edge_deletion(const SimpleGraph& g) {
    std::optional<DensestMinor> best;
    std::string best_cert;
    for (const Edge& e : g.edges()) {
        SimpleGraph h = delete_edge(g, e);
        std::string cert = certificate(h);
        if (!best || cert < best_cert) {
            best_cert = cert;
            Rational d = density(h);
            best = DensestMinor{std::move(h), d, MinorWitness{singletons(g)}};
        }
    }
    return best;
}

}  // namespace

DensestMinor densest_minor(const SimpleGraph& g, const MinorSearchOptions& options) {
    check_guardrail(g, options.guardrail);
    if (options.backend == DensestBackend::BranchSets) return *branch_set_best(g, g.order());
    return follow_memo(g, singletons(g), memo_of(options));
}

MinorRank densest_minor_rank(const SimpleGraph& g, const MinorSearchOptions& options) {
    check_guardrail(g, options.guardrail);
    if (options.backend == DensestBackend::BranchSets) return rank_of(*branch_set_best(g, g.order()));
    CanonicalForm cf = canonical_form(g);
    return closure_best(cf.graph, cf.certificate, memo_of(options));
}

std::optional<DensestMinor> best_proper_minor(const SimpleGraph& g, const MinorSearchOptions& options) {
    check_guardrail(g, options.guardrail);
    if (g.order() == 1) return std::nullopt;

    if (options.backend == DensestBackend::BranchSets) {
        std::optional<DensestMinor> best = branch_set_best(g, g.order() - 1);
        if (auto del = best_edge_deletion(g)) {
            if (!best || rank_of(*del).better_than(rank_of(*best))) best = std::move(del);
        }
        return best;
    }

    DensestMemo& memo = memo_of(options);
    std::optional<MinorStep> best_step;
    std::optional<MinorRank> best_rank;
    for (const MinorStep& step : all_steps(g)) {
        CanonicalForm cf = canonical_form(apply_step(g, step).graph);
        MinorRank r = closure_best(cf.graph, cf.certificate, memo);
        if (!best_rank || r.better_than(*best_rank)) {
            best_rank = std::move(r);
            best_step = step;
        }
    }
    StepResult first = apply_step(g, *best_step);
    auto sets = push_branch_sets(singletons(g), first);
    return follow_memo(std::move(first.graph), std::move(sets), memo);
}

MinimalityCertificate is_density_minimal(const SimpleGraph& g, const MinorSearchOptions& options) {
    MinimalityCertificate cert{g, true, density(g), best_proper_minor(g, options)};
    if (cert.best_proper_minor) cert.verdict = cert.best_proper_minor->density < cert.subject_density;
    return cert;
}

bool density_minimal(const SimpleGraph& g, const MinorSearchOptions& options) {
    check_guardrail(g, options.guardrail);
    if (g.order() == 1) return true;
    const Rational own = density(g);
    if (options.backend == DensestBackend::BranchSets) {
        bool minimal = true;
        const int n = g.order();
        auto visit = [&](const std::array<VertexMask, kMaxVertices>& blocks, int k) {
            if (k == 0 || k >= n) return true;
            int e = quotient_edges(g, blocks, k);
            if (e >= 0 && Rational(e, k) >= own) {
                minimal = false;
                return false;
            }
            return true;
        };
        PartitionWalk<decltype(visit)> walk(n, visit);
        walk.run();
        return minimal;
    }
    DensestMemo& memo = memo_of(options);
    for (const MinorStep& step : all_steps(g)) {
        CanonicalForm cf = canonical_form(apply_step(g, step).graph);
        if (closure_best(cf.graph, cf.certificate, memo).density >= own) return false;
    }
    return true;
}

bool is_rank_minimal(const SimpleGraph& g) {
    const int r = rank(g);
    for (const MinorStep& step : all_steps(g))
        if (rank(apply_step(g, step).graph) == r) return false;
    return true;
}

MinorClosure minor_closure(const SimpleGraph& g, const MinorSearchOptions& options) {
    check_guardrail(g, options.guardrail);
    DensestMemo& memo = memo_of(options);
    CanonicalForm root = canonical_form(g);
    MinorClosure out;
    out.root = root.certificate;
    std::deque<SimpleGraph> queue{root.graph};
    out.members.emplace(root.certificate, closure_best(root.graph, root.certificate, memo).density);
    while (!queue.empty()) {
        SimpleGraph current = std::move(queue.front());
        queue.pop_front();
        for (CanonicalForm& cf : one_step_minors(current)) {
            if (out.members.contains(cf.certificate)) continue;
            out.members.emplace(cf.certificate, closure_best(cf.graph, cf.certificate, memo).density);
            queue.push_back(std::move(cf.graph));
        }
    }
    return out;
}

}  // namespace mdl
