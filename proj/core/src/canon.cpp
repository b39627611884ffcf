#include "mdl/canon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mdl/error.hpp"
#include "mdl/graph_io.hpp"

namespace mdl {

namespace {

// Ordered partition of the vertex set; each cell is a bit mask.
struct Partition {
    int count = 0;
    std::array<VertexMask, kMaxVertices> cells{};

    [[nodiscard]] bool discrete(int n) const { return count == n; }
};

using Code = std::array<VertexMask, kMaxVertices>;
using Perm = std::array<std::int8_t, kMaxVertices>;

// Splits cells by neighbor counts into splitter cells until the partition is
// equitable. Sub-cells are ordered by count, so the result commutes with
// relabeling the graph.
void refine(const SimpleGraph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count && !changed; ++s) {
            const VertexMask splitter = p.cells[static_cast<std::size_t>(s)];
            for (int x = 0; x < p.count; ++x) {
                const VertexMask cell = p.cells[static_cast<std::size_t>(x)];
                if (std::popcount(cell) < 2) continue;
                std::array<VertexMask, kMaxVertices + 1> by_count{};
                VertexMask rest = cell;
                int lo = kMaxVertices;
                int hi = 0;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    int c = std::popcount(g.neighbors(v) & splitter);
                    by_count[static_cast<std::size_t>(c)] |= VertexMask{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) continue;
                std::array<VertexMask, kMaxVertices> pieces{};
                int k = 0;
                for (int c = lo; c <= hi; ++c)
                    if (by_count[static_cast<std::size_t>(c)]) pieces[static_cast<std::size_t>(k++)] = by_count[static_cast<std::size_t>(c)];
                // Shift later cells right by k-1 and insert the pieces at x.
                for (int i = p.count - 1; i > x; --i) p.cells[static_cast<std::size_t>(i + k - 1)] = p.cells[static_cast<std::size_t>(i)];
                for (int i = 0; i < k; ++i) p.cells[static_cast<std::size_t>(x + i)] = pieces[static_cast<std::size_t>(i)];
                p.count += k - 1;
                changed = true;
                break;
            }
        }
    }
}

class Search {
public:
    explicit Search(const SimpleGraph& g) : g_(g), n_(g.order()) {}

    void run(Partition p) { visit(p); }

    [[nodiscard]] const std::array<int, kMaxVertices>& best_order() const { return best_order_; }

private:
    static constexpr int kNoJump = std::numeric_limits<int>::max();

    void visit(Partition p) {
        refine(g_, p);
        const int level = static_cast<int>(prefix_.size());
        if (p.discrete(n_)) {
            leaf(p);
            return;
        }
        int target = -1;
        int target_size = kMaxVertices + 1;
        for (int i = 0; i < p.count; ++i) {
            int sz = std::popcount(p.cells[static_cast<std::size_t>(i)]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        const VertexMask cell = p.cells[static_cast<std::size_t>(target)];
        VertexMask explored = 0;
        for (int v : mask_to_vector(cell)) {
            if (explored && (orbit_of(v) & explored)) continue;
            explored |= VertexMask{1} << v;

            Partition child = p;
            for (int i = child.count - 1; i > target; --i) child.cells[static_cast<std::size_t>(i + 1)] = child.cells[static_cast<std::size_t>(i)];
            child.cells[static_cast<std::size_t>(target)] = VertexMask{1} << v;
            child.cells[static_cast<std::size_t>(target + 1)] = cell & ~(VertexMask{1} << v);
            ++child.count;

            prefix_.push_back(v);
            visit(child);
            prefix_.pop_back();

            if (jump_ != kNoJump) {
                if (jump_ < level) return;
                jump_ = kNoJump;
            }
        }
    }

    void leaf(const Partition& p) {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> pos{};
        for (int i = 0; i < n_; ++i) {
            int v = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
            order[static_cast<std::size_t>(i)] = v;
            pos[static_cast<std::size_t>(v)] = i;
        }
        Code code{};
        for (int i = 0; i < n_; ++i) {
            VertexMask nb = g_.neighbors(order[static_cast<std::size_t>(i)]);
            VertexMask row = 0;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                row |= VertexMask{1} << pos[static_cast<std::size_t>(w)];
            }
            code[static_cast<std::size_t>(i)] = row;
        }

        if (!have_first_) {
            have_first_ = true;
            first_code_ = best_code_ = code;
            first_order_ = best_order_ = order;
            first_path_ = prefix_;
            return;
        }
        if (code == first_code_) {
            add_automorphism(first_order_, order);
            std::size_t l = 0;
            while (l < prefix_.size() && l < first_path_.size() && prefix_[l] == first_path_[l]) ++l;
            jump_ = static_cast<int>(l);
            return;
        }
        int cmp = compare(code, best_code_);
        if (cmp == 0) {
            add_automorphism(best_order_, order);
        } else if (cmp > 0) {
            best_code_ = code;
            best_order_ = order;
        }
    }

    [[nodiscard]] int compare(const Code& a, const Code& b) const {
        for (int i = 0; i < n_; ++i) {
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
        }
        return 0;
    }

    // Both orders produce the same code, so from[i] -> to[i] is an automorphism.
    void add_automorphism(const std::array<int, kMaxVertices>& from, const std::array<int, kMaxVertices>& to) {
        Perm perm{};
        for (int i = 0; i < n_; ++i)
            perm[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(to[static_cast<std::size_t>(i)]);
        generators_.push_back(perm);
    }

    // Orbit of v under the stored automorphisms that fix the current prefix pointwise.
    [[nodiscard]] VertexMask orbit_of(int v) const {
        VertexMask orbit = VertexMask{1} << v;
        std::vector<const Perm*> usable;
        for (const Perm& perm : generators_) {
            bool fixes = std::all_of(prefix_.begin(), prefix_.end(),
                                     [&](int x) { return perm[static_cast<std::size_t>(x)] == x; });
            if (fixes) usable.push_back(&perm);
        }
        VertexMask frontier = orbit;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (const Perm* perm : usable) {
                VertexMask img = VertexMask{1} << (*perm)[static_cast<std::size_t>(x)];
                if (!(orbit & img)) {
                    orbit |= img;
                    frontier |= img;
                }
            }
        }
        return orbit;
    }

    const SimpleGraph& g_;
    const int n_;
    std::vector<int> prefix_;
    std::vector<int> first_path_;
    bool have_first_ = false;
    Code first_code_{};
    Code best_code_{};
    std::array<int, kMaxVertices> first_order_{};
    std::array<int, kMaxVertices> best_order_{};
    std::vector<Perm> generators_;
    int jump_ = kNoJump;
};

CanonicalForm canonicalize(const SimpleGraph& g, std::span<const int> colors) {
    const int n = g.order();
    Partition start;
    if (colors.empty()) {
        start.count = 1;
        start.cells[0] = g.vertex_mask();
    } else {
        if (static_cast<int>(colors.size()) != n) throw InvalidArgument("color vector size mismatch");
        int max_color = *std::max_element(colors.begin(), colors.end());
        if (*std::min_element(colors.begin(), colors.end()) < 0) throw InvalidArgument("negative vertex color");
        for (int c = 0; c <= max_color; ++c) {
            VertexMask cell = 0;
            for (int v = 0; v < n; ++v)
                if (colors[static_cast<std::size_t>(v)] == c) cell |= VertexMask{1} << v;
            if (cell) start.cells[static_cast<std::size_t>(start.count++)] = cell;
        }
    }

    Search search(g);
    search.run(start);

    CanonicalForm out;
    out.labeling.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) out.labeling[static_cast<std::size_t>(search.best_order()[static_cast<std::size_t>(i)])] = i;
    out.graph = g.relabeled(out.labeling);
    out.certificate = encode_graph6(out.graph);
    if (!colors.empty()) {
        out.certificate.push_back('|');
        for (int i = 0; i < n; ++i) {
            int c = colors[static_cast<std::size_t>(search.best_order()[static_cast<std::size_t>(i)])];
            out.certificate += std::to_string(c);
            if (i + 1 < n) out.certificate.push_back(',');
        }
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) { return canonicalize(g, {}); }

CanonicalForm canonical_form(const SimpleGraph& g, std::span<const int> colors) {
    return canonicalize(g, colors);
}

std::string certificate(const SimpleGraph& g) { return canonicalize(g, {}).certificate; }

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return certificate(a) == certificate(b);
}

}  // namespace mdl
