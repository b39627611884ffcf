#include "mdl/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mdl/error.hpp"

namespace mdl {

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("multigraph must have at least one vertex");
    if (n > kMaxVertices) throw SizeOverflow("multigraph has more than 32 vertices");
    mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    loops_.assign(static_cast<std::size_t>(n), 0);
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

int Multigraph::size() const noexcept {
    int total = std::accumulate(loops_.begin(), loops_.end(), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) total += mult_[slot(u, v)];
    return total;
}

int Multigraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return loops_[static_cast<std::size_t>(u)];
    return mult_[slot(u, v)];
}

int Multigraph::loops(int v) const {
    check_vertex(v);
    return loops_[static_cast<std::size_t>(v)];
}

void Multigraph::add_edges(int u, int v, int count) {
    check_vertex(u);
    check_vertex(v);
    if (count < 0) throw InvalidArgument("negative edge count");
    if (u == v) {
        add_loops(u, count);
        return;
    }
    mult_[slot(u, v)] += count;
    mult_[slot(v, u)] += count;
}

void Multigraph::add_loops(int v, int count) {
    check_vertex(v);
    if (count < 0) throw InvalidArgument("negative loop count");
    loops_[static_cast<std::size_t>(v)] += count;
}

std::vector<std::vector<int>> mg_components(const Multigraph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> members{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head) {
            int v = members[head];
            for (int w = 0; w < n; ++w) {
                if (w != v && g.multiplicity(v, w) > 0 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

int mg_component_count(const Multigraph& g) { return static_cast<int>(mg_components(g).size()); }
bool mg_is_connected(const Multigraph& g) { return mg_component_count(g) == 1; }

Rational mg_density(const Multigraph& g) { return Rational(g.size(), g.order()); }

int mg_rank(const Multigraph& g) { return g.size() - g.order() + mg_component_count(g); }

bool mg_is_tree(const Multigraph& g) { return mg_is_connected(g) && mg_rank(g) == 0; }

Multigraph mg_contract(const Multigraph& g, int u, int v) {
    if (u == v) throw InvalidArgument("a self-loop cannot be contracted");
    if (g.multiplicity(u, v) == 0) throw InvalidArgument("edge is not present");
    if (u > v) std::swap(u, v);
    const int n = g.order();
    auto to = [&](int w) { return w < v ? w : (w == v ? u : w - 1); };
    Multigraph out(n - 1);
    for (int w = 0; w < n; ++w) out.add_loops(to(w), g.loops(w));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int count = g.multiplicity(a, b);
            if (a == u && b == v) --count;  // the contracted instance disappears
            if (count > 0) out.add_edges(to(a), to(b), count);
        }
    }
    return out;
}

Multigraph mg_delete_edge(const Multigraph& g, int u, int v) {
    if (u == v) return mg_delete_loop(g, u);
    if (g.multiplicity(u, v) == 0) throw InvalidArgument("edge is not present");
    Multigraph rebuilt(g.order());
    for (int a = 0; a < g.order(); ++a) {
        rebuilt.add_loops(a, g.loops(a));
        for (int b = a + 1; b < g.order(); ++b) {
            int count = g.multiplicity(a, b) - ((a == std::min(u, v) && b == std::max(u, v)) ? 1 : 0);
            if (count > 0) rebuilt.add_edges(a, b, count);
        }
    }
    return rebuilt;
}

Multigraph mg_delete_loop(const Multigraph& g, int v) {
    if (g.loops(v) == 0) throw InvalidArgument("no loop at vertex " + std::to_string(v));
    Multigraph out(g.order());
    for (int a = 0; a < g.order(); ++a) {
        out.add_loops(a, g.loops(a) - (a == v ? 1 : 0));
        for (int b = a + 1; b < g.order(); ++b) out.add_edges(a, b, g.multiplicity(a, b));
    }
    return out;
}

Multigraph mg_delete_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("vertex is not present");
    if (g.order() == 1) throw InvalidArgument("cannot delete the last vertex");
    auto to = [&](int w) { return w < v ? w : w - 1; };
    Multigraph out(g.order() - 1);
    for (int a = 0; a < g.order(); ++a) {
        if (a == v) continue;
        out.add_loops(to(a), g.loops(a));
        for (int b = a + 1; b < g.order(); ++b)
            if (b != v) out.add_edges(to(a), to(b), g.multiplicity(a, b));
    }
    return out;
}

std::vector<Multigraph> mg_one_step_minors(const Multigraph& g) {
    std::vector<Multigraph> out;
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.loops(v) > 0) out.push_back(mg_delete_loop(g, v));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.multiplicity(a, b) == 0) continue;
            out.push_back(mg_delete_edge(g, a, b));
            out.push_back(mg_contract(g, a, b));
        }
    }
    if (n > 1)
        for (int v = 0; v < n; ++v) out.push_back(mg_delete_vertex(g, v));
    return out;
}

std::string mg_certificate(const Multigraph& g) {
    const int n = g.order();
    if (n > kMultigraphGuardrail)
        throw GuardrailExceeded("multigraph canonical form limited to " + std::to_string(kMultigraphGuardrail) +
                                " vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        // perm[i] is the input vertex placed at position i.
        std::vector<int> code;
        code.reserve(static_cast<std::size_t>(n + n * (n - 1) / 2));
        for (int i = 0; i < n; ++i) code.push_back(g.loops(perm[static_cast<std::size_t>(i)]));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code.push_back(g.multiplicity(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
        if (best.empty() || code > best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::string out = std::to_string(n) + "|";
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i == static_cast<std::size_t>(n)) out += "|";
        else if (i > 0) out += ",";
        out += std::to_string(best[i]);
    }
    return out;
}

namespace {

struct MgBest {
    MinorRank rank;
    Multigraph minor;
};

// Best minor over the closure, memoized by certificate for the session.
MgBest mg_closure_best(const Multigraph& g, const std::string& cert) {
    static std::mutex mutex;
    static std::map<std::string, MgBest> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(cert); it != memo.end()) return it->second;
    }
    MgBest best{{mg_density(g), g.order(), cert}, g};
    for (const Multigraph& m : mg_one_step_minors(g)) {
        MgBest r = mg_closure_best(m, mg_certificate(m));
        if (r.rank.better_than(best.rank)) best = std::move(r);
    }
    std::lock_guard lock(mutex);
    memo.try_emplace(cert, best);
    return best;
}

void check_mg_guardrail(const Multigraph& g, int guardrail) {
    if (g.order() > guardrail)
        throw GuardrailExceeded("multigraph has " + std::to_string(g.order()) + " vertices, guardrail is " +
                                std::to_string(guardrail));
}

Multigraph bouquet(int loops) {
    Multigraph g(1);
    g.add_loops(0, loops);
    return g;
}

Multigraph induced(const Multigraph& g, const std::vector<int>& vertices) {
    Multigraph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out.add_loops(static_cast<int>(i), g.loops(vertices[i]));
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            out.add_edges(static_cast<int>(i), static_cast<int>(j), g.multiplicity(vertices[i], vertices[j]));
    }
    return out;
}

}  // namespace

MgDensest mg_densest_minor(const Multigraph& g) {
    std::optional<MgBest> best;
    for (const auto& comp : mg_components(g)) {
        Multigraph piece = induced(g, comp);
        const int r = mg_rank(piece);
        Multigraph candidate = r >= 1 ? bouquet(r) : piece;
        MinorRank key{mg_density(candidate), candidate.order(),
                      candidate.order() <= kMultigraphGuardrail ? mg_certificate(candidate) : std::string()};
        if (!best || key.better_than(best->rank)) best = MgBest{std::move(key), std::move(candidate)};
    }
    return {best->minor, best->rank.density};
}

MgDensest mg_densest_minor_by_closure(const Multigraph& g, int guardrail) {
    check_mg_guardrail(g, guardrail);
    MgBest best = mg_closure_best(g, mg_certificate(g));
    return {best.minor, best.rank.density};
}

bool mg_is_density_minimal(const Multigraph& g, int guardrail) {
    check_mg_guardrail(g, guardrail);
    const Rational own = mg_density(g);
    for (const Multigraph& m : mg_one_step_minors(g))
        if (mg_closure_best(m, mg_certificate(m)).rank.density >= own) return false;
    return true;
}

bool is_integer_or_superparticular(const Rational& r) {
    return (r.is_integer() && r.num() >= 0) || is_superparticular(r);
}

MgFamilyDensity mg_component_family_density(const MgFamilyDescriptor& desc) {
    if (desc.generators.empty()) throw InvalidArgument("component family needs at least one generator");
    if (desc.unbounded_bonds) return {true, Rational(0)};
    Rational best(0);
    for (const Multigraph& g : desc.generators) best = std::max(best, mg_densest_minor(g).density);
    return {false, best};
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip(std::string_view text) {
    std::string out;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    return out;
}

int to_int(std::string_view item, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
        throw ParseError("bad " + std::string(what) + " '" + std::string(item) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s = s.substr(pos + 1);
    }
    return out;
}

}  // namespace

Multigraph parse_multigraph(std::string_view text) {
    const std::string s = strip(text);
    auto sections = split(s, ';');
    if (sections.empty() || !sections[0].starts_with("n="))
        throw ParseError("multigraph text must start with 'n=<k>'");
    const int n = to_int(sections[0].substr(2), "vertex count");
    if (n < 1) throw ParseError("multigraph needs at least one vertex");
    if (n > kMaxVertices) throw SizeOverflow("multigraph has more than 32 vertices");
    Multigraph g(n);
    for (std::size_t i = 1; i < sections.size(); ++i) {
        std::string_view sec = sections[i];
        if (sec.empty()) continue;
        const bool loops = sec.starts_with("loops");
        if (loops) sec.remove_prefix(5);
        if (sec.empty()) continue;
        for (std::string_view item : split(sec, ',')) {
            if (item.empty()) throw ParseError("empty item in multigraph text");
            auto colon = item.find(':');
            if (loops) {
                if (colon == std::string_view::npos) throw ParseError("loop item needs 'v:count'");
                int v = to_int(item.substr(0, colon), "vertex");
                int c = to_int(item.substr(colon + 1), "loop count");
                if (v >= n) throw ParseError("loop at missing vertex " + std::to_string(v));
                g.add_loops(v, c);
            } else {
                std::string_view pair = item.substr(0, colon);
                int c = colon == std::string_view::npos ? 1 : to_int(item.substr(colon + 1), "multiplicity");
                auto dash = pair.find('-');
                if (dash == std::string_view::npos) throw ParseError("edge item needs 'u-v'");
                int u = to_int(pair.substr(0, dash), "vertex");
                int v = to_int(pair.substr(dash + 1), "vertex");
                if (u >= n || v >= n) throw ParseError("edge references a missing vertex");
                g.add_edges(u, v, c);
            }
        }
    }
    return g;
}

std::string format_multigraph(const Multigraph& g) {
    std::string out = "n=" + std::to_string(g.order()) + ";";
    bool first = true;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            int c = g.multiplicity(u, v);
            if (c == 0) continue;
            out += first ? " " : ", ";
            out += std::to_string(u) + "-" + std::to_string(v) + ":" + std::to_string(c);
            first = false;
        }
    }
    bool any_loops = false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.loops(v) == 0) continue;
        out += any_loops ? ", " : "; loops ";
        out += std::to_string(v) + ":" + std::to_string(g.loops(v));
        any_loops = true;
    }
    return out;
}

Multigraph to_multigraph(const SimpleGraph& g) {
    Multigraph out(g.order());
    for (const Edge& e : g.edges()) out.add_edges(e.u, e.v, 1);
    return out;
}

std::vector<Multigraph> enumerate_multigraphs(int max_n, int max_m, bool connected_only) {
    if (max_n > kMultigraphGuardrail) throw GuardrailExceeded("multigraph enumeration limited to 7 vertices");
    std::map<std::string, Multigraph> seen;
    for (int n = 1; n <= max_n; ++n) {
        // Slots: n loop counts, then the pairs (a, b) with a < b.
        std::vector<std::pair<int, int>> slots;
        for (int v = 0; v < n; ++v) slots.emplace_back(v, v);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
        std::vector<int> counts(slots.size(), 0);
        auto emit = [&] {
            Multigraph g(n);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (counts[i]) g.add_edges(slots[i].first, slots[i].second, counts[i]);
            if (connected_only && !mg_is_connected(g)) return;
            seen.try_emplace(mg_certificate(g), g);
        };
        auto fill = [&](auto&& self, std::size_t i, int left) -> void {
            if (i == slots.size()) {
                emit();
                return;
            }
            for (int c = 0; c <= left; ++c) {
                counts[i] = c;
                self(self, i + 1, left - c);
            }
            counts[i] = 0;
        };
        fill(fill, 0, max_m);
    }
    std::vector<Multigraph> out;
    for (auto& [cert, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace mdl
