#ifndef GPACK_PACKING_HPP
#define GPACK_PACKING_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gpack/graph.hpp"

namespace gpack {

// Bijection of {0,...,n-1}; perm[i] is the label assigned to red vertex i.
// The blue graph G1 keeps its labels fixed, only G2 is relabelled.
struct Labeling {
    std::vector<int> perm;

    Labeling() = default;
    explicit Labeling(std::vector<int> p) : perm(std::move(p)) {
        if (!is_permutation(perm)) throw std::invalid_argument("Labeling: not a permutation");
    }

    static Labeling identity(int n) {
        std::vector<int> p(std::size_t(n));
        for (int i = 0; i < n; ++i) p[std::size_t(i)] = i;
        Labeling l;
        l.perm = std::move(p);
        return l;
    }

    int size() const { return int(perm.size()); }

    Labeling inverse() const {
        std::vector<int> inv(perm.size());
        for (int i = 0; i < size(); ++i) inv[std::size_t(perm[std::size_t(i)])] = i;
        Labeling l;
        l.perm = std::move(inv);
        return l;
    }

    static bool is_permutation(const std::vector<int>& p) {
        std::vector<bool> seen(p.size(), false);
        for (int v : p) {
            if (v < 0 || v >= int(p.size()) || seen[std::size_t(v)]) return false;
            seen[std::size_t(v)] = true;
        }
        return true;
    }

    bool operator==(const Labeling& o) const { return perm == o.perm; }
};

// Pairs that are an edge of both labelled graphs: ij in E(G2) with
// perm(i)perm(j) in E(G1), reported in label space, ascending.
inline EdgeList purple_edges(const Graph& g1, const Graph& g2, const Labeling& lab) {
    if (g1.n() != g2.n() || lab.size() != g1.n())
        throw std::invalid_argument("purple_edges: size mismatch");
    EdgeList out;
    for (int i = 0; i < g2.n(); ++i) {
        const Bitset& row = g2.neighbors(i);
        for (int j = row.find_next(i); j >= 0; j = row.find_next(j)) {
            int a = lab.perm[std::size_t(i)];
            int b = lab.perm[std::size_t(j)];
            if (a > b) std::swap(a, b);
            if (g1.has_edge(a, b)) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool verify_witness(const Graph& g1, const Graph& g2, const Labeling& lab) {
    return purple_edges(g1, g2, lab).empty();
}

// A labelled (G1, G2) pair together with its purple-edge cache and the
// labelled red adjacency rows. Immutable; apply_swap returns a new value.
class NearPacking {
public:
    NearPacking(Graph g1, Graph g2, Labeling lab)
        : NearPacking(std::make_shared<const Graph>(std::move(g1)),
                      std::make_shared<const Graph>(std::move(g2)), std::move(lab)) {}

    NearPacking(std::shared_ptr<const Graph> g1, std::shared_ptr<const Graph> g2, Labeling lab)
        : g1_(std::move(g1)), g2_(std::move(g2)), lab_(std::move(lab)) {
        if (g1_->n() != g2_->n() || lab_.size() != g1_->n())
            throw std::invalid_argument("NearPacking: size mismatch");
        rebuild();
    }

    const Graph& g1() const { return *g1_; }
    const Graph& g2() const { return *g2_; }
    const Labeling& labeling() const { return lab_; }
    int n() const { return g1_->n(); }

    const EdgeList& purple() const { return purple_; }

    // blue neighbourhood of a label (G1 labels are fixed)
    const Bitset& blue_row(int label) const { return g1_->neighbors(label); }

    // red neighbourhood of a label under the current labelling
    const Bitset& red_row(int label) const {
        if (label < 0 || label >= n()) throw std::out_of_range("NearPacking: label out of range");
        return red_rows_[std::size_t(label)];
    }

    // same labelled pair with a different labeling; graphs are shared
    NearPacking with_labeling(Labeling lab) const { return NearPacking(g1_, g2_, std::move(lab)); }

private:
    void rebuild() {
        const int nn = n();
        red_rows_.assign(std::size_t(nn), Bitset(nn));
        const Labeling inv = lab_.inverse();
        for (int x = 0; x < nn; ++x) {
            const Bitset& row = g2_->neighbors(inv.perm[std::size_t(x)]);
            Bitset& dst = red_rows_[std::size_t(x)];
            for (int y = row.find_first(); y >= 0; y = row.find_next(y))
                dst.set(lab_.perm[std::size_t(y)]);
        }
        purple_.clear();
        for (int x = 0; x < nn; ++x) {
            const Bitset& row = red_rows_[std::size_t(x)];
            for (int y = row.find_next(x); y >= 0; y = row.find_next(y)) {
                if (g1_->has_edge(x, y)) purple_.emplace_back(x, y);
            }
        }
        std::sort(purple_.begin(), purple_.end());
    }

    std::shared_ptr<const Graph> g1_;
    std::shared_ptr<const Graph> g2_;
    Labeling lab_;
    EdgeList purple_;
    std::vector<Bitset> red_rows_;
};

enum class PackStatus {
    packed,       // witness labeling found and verified
    no_packing,   // search space exhausted, no packing exists
    inconclusive, // node budget or step budget ran out
};

struct PackingResult {
    PackStatus status = PackStatus::inconclusive;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0; // expanded search nodes (or local-search steps)
    double elapsed_ms = 0.0;

    bool packs() const { return status == PackStatus::packed; }
};

namespace detail {

// Backtracking injective embedding of G1 into the complement of G2.
// Variables are G1 vertices (static order: descending degree, then index);
// domains are label bitsets pruned against the complement rows of already
// placed neighbours; the next variable is always one with the fewest
// remaining candidates. Values are tried in ascending label order, so the
// search is deterministic.
class EmbedSearch {
public:
    EmbedSearch(const Graph& g1, const Graph& g2, std::uint64_t node_budget)
        : g1_(g1), comp2_(complement(g2)), budget_(node_budget), n_(g1.n()) {}

    // returns status; on packed, fills the labeling witness (red->label)
    PackStatus run(std::optional<Labeling>& witness, std::uint64_t& nodes) {
        order_.clear();
        for (int v = 0; v < n_; ++v) {
            if (g1_.degree(v) > 0) order_.push_back(v);
        }
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            int da = g1_.degree(a), db = g1_.degree(b);
            return da != db ? da > db : a < b;
        });
        domain_.assign(std::size_t(n_), Bitset::all_set(n_));
        placed_.assign(std::size_t(n_), -1);
        used_ = Bitset(n_);
        nodes_ = 0;
        PackStatus st = dfs(0);
        nodes = nodes_;
        if (st == PackStatus::packed) {
            fill_isolated();
            // placed_ is the embedding psi: G1 vertex -> label; the witness
            // labeling moves G2, i.e. perm = psi^{-1}
            std::vector<int> perm(std::size_t(n_));
            for (int v = 0; v < n_; ++v) perm[std::size_t(placed_[std::size_t(v)])] = v;
            witness = Labeling(std::move(perm));
        }
        return st;
    }

private:
    PackStatus dfs(std::size_t depth) {
        if (depth == order_.size()) return PackStatus::packed;
        if (++nodes_ > budget_) return PackStatus::inconclusive;

        // fail-first: the unplaced vertex with the fewest candidates
        int best = -1, best_count = n_ + 1;
        std::size_t best_slot = depth;
        for (std::size_t k = depth; k < order_.size(); ++k) {
            int v = order_[k];
            int c = (domain_[std::size_t(v)] - used_).count();
            if (c < best_count) {
                best_count = c;
                best = v;
                best_slot = k;
                if (c == 0) break;
            }
        }
        if (best_count == 0) return PackStatus::no_packing;
        std::swap(order_[depth], order_[best_slot]);

        const Bitset candidates = domain_[std::size_t(best)] - used_;
        const Bitset& nbrs = g1_.neighbors(best);
        for (int label = candidates.find_first(); label >= 0;
             label = candidates.find_next(label)) {
            placed_[std::size_t(best)] = label;
            used_.set(label);
            // prune unplaced neighbours against the complement row of label
            std::vector<std::pair<int, Bitset>> saved;
            for (int u = nbrs.find_first(); u >= 0; u = nbrs.find_next(u)) {
                if (placed_[std::size_t(u)] < 0) {
                    saved.emplace_back(u, domain_[std::size_t(u)]);
                    domain_[std::size_t(u)] &= comp2_.neighbors(label);
                }
            }
            PackStatus st = dfs(depth + 1);
            if (st != PackStatus::no_packing) {
                if (st == PackStatus::inconclusive) restore(saved, best, label);
                return st;
            }
            restore(saved, best, label);
        }
        std::swap(order_[depth], order_[best_slot]);
        return PackStatus::no_packing;
    }

    void restore(const std::vector<std::pair<int, Bitset>>& saved, int v, int label) {
        for (const auto& [u, dom] : saved) domain_[std::size_t(u)] = dom;
        placed_[std::size_t(v)] = -1;
        used_.reset(label);
    }

    void fill_isolated() {
        int next = 0;
        for (int v = 0; v < n_; ++v) {
            if (placed_[std::size_t(v)] >= 0) continue;
            while (used_.test(next)) ++next;
            placed_[std::size_t(v)] = next;
            used_.set(next);
        }
    }

    const Graph& g1_;
    Graph comp2_;
    std::uint64_t budget_;
    int n_;
    std::vector<int> order_;
    std::vector<Bitset> domain_;
    std::vector<int> placed_;
    Bitset used_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

// Exact packing decision: G1 and G2 pack iff G1 embeds into the complement
// of G2. Three-valued: a spent node budget is reported as inconclusive and
// never as a non-packing.
inline PackingResult packs_exact(const Graph& g1, const Graph& g2,
                                 std::uint64_t node_budget = 100'000'000) {
    if (g1.n() != g2.n()) throw std::invalid_argument("packs_exact: size mismatch");
    if (node_budget == 0) throw std::invalid_argument("packs_exact: node budget must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    PackingResult res;
    if (g1.edge_count() == 0 || g2.edge_count() == 0) {
        res.status = PackStatus::packed;
        res.witness = Labeling::identity(g1.n());
    } else {
        detail::EmbedSearch search(g1, g2, node_budget);
        res.status = search.run(res.witness, res.nodes);
    }
    if (res.status == PackStatus::packed && !verify_witness(g1, g2, *res.witness))
        throw std::logic_error("packs_exact: witness failed verification");
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace gpack

#endif
