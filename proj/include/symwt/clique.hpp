#pragma once

// Maximum clique by branch and bound over bitset adjacency. Vertices are
// renumbered by descending degree, a greedy clique seeds the incumbent and
// greedy colouring supplies the pruning bound at each node. The search stops
// early once the incumbent meets the colouring bound of the whole graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace symwt {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : bits_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    /// Calls f(i) for every set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x != 0) {
                const int b = std::countr_zero(x);
                f(w * 64 + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
    }
    std::optional<std::size_t> first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected simple graph stored as adjacency bitsets.
class Graph {
public:
    explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

    std::size_t size() const { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    /// Builds the graph whose edges are the pairs accepted by `compatible`.
    template <class Pred>
    static Graph from_predicate(std::size_t n, Pred&& compatible) {
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (compatible(i, j)) g.add_edge(i, j);
        return g;
    }

private:
    std::vector<Bitset> adj_;
};

struct CliqueOptions {
    /// Abort after this many branch nodes; 0 means unlimited.
    std::uint64_t node_limit = 0;
    /// If non-empty, every maximum clique is known to contain (an image under
    /// a graph automorphism of) one of these vertices; the search branches on
    /// them at the root only.
    std::vector<std::size_t> root_candidates;
};

struct CliqueResult {
    std::vector<std::size_t> vertices;  ///< best clique found, original labels
    bool complete = true;               ///< false when node_limit stopped the search
    std::uint64_t nodes = 0;
    std::size_t root_bound = 0;         ///< colouring bound at the root, always >= optimum
};

namespace detail {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const CliqueOptions& opt) : opt_(opt), n_(g.size()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<std::size_t> deg(n_);
        for (std::size_t v = 0; v < n_; ++v) deg[v] = g.degree(v);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        position_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
        adj_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i)
            g.neighbours(order_[i]).for_each([&](std::size_t u) { adj_[i].set(position_[u]); });
    }

    CliqueResult run() {
        CliqueResult res;
        if (n_ == 0) return res;
        seed_greedy();
        Bitset all(n_);
        for (std::size_t i = 0; i < n_; ++i) all.set(i);
        {
            std::vector<std::size_t> verts, colours;
            colour(all, verts, colours);
            res.root_bound = colours.empty() ? 0 : colours.back();
            target_ = res.root_bound;
        }
        if (!opt_.root_candidates.empty()) {
            for (const std::size_t v : opt_.root_candidates) {
                if (aborted_ || optimal()) break;
                const std::size_t pv = position_.at(v);
                current_.assign(1, pv);
                if (1 > best_.size()) best_ = current_;
                expand(adj_[pv]);
            }
        } else if (!optimal()) {
            expand(all);
        }
        res.complete = !aborted_;
        res.nodes = nodes_;
        res.root_bound = std::max(res.root_bound, best_.size());
        for (const std::size_t p : best_) res.vertices.push_back(order_[p]);
        std::sort(res.vertices.begin(), res.vertices.end());
        return res;
    }

private:
    void seed_greedy() {
        // Start from each of the first few vertices and extend greedily.
        const std::size_t starts = std::min<std::size_t>(n_, 32);
        for (std::size_t s = 0; s < starts; ++s) {
            std::vector<std::size_t> clique{s};
            Bitset cand = adj_[s];
            while (auto v = cand.first()) {
                clique.push_back(*v);
                cand &= adj_[*v];
            }
            if (clique.size() > best_.size()) best_ = clique;
        }
    }

    // Greedy sequential colouring of p; verts/colours list vertices by
    // non-decreasing colour number.
    void colour(const Bitset& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
        verts.clear();
        colours.clear();
        Bitset uncoloured = p;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            while (auto v = q.first()) {
                uncoloured.reset(*v);
                q.reset(*v);
                q.and_not(adj_[*v]);
                verts.push_back(*v);
                colours.push_back(k);
            }
        }
    }

    // An incumbent that meets the root colouring bound cannot be beaten.
    bool optimal() const { return best_.size() >= target_; }

    void expand(Bitset p) {
        if (aborted_ || optimal()) return;
        ++nodes_;
        if (opt_.node_limit != 0 && nodes_ > opt_.node_limit) {
            aborted_ = true;
            return;
        }
        std::vector<std::size_t> verts, colours;
        colour(p, verts, colours);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colours[i] <= best_.size()) return;
            const std::size_t v = verts[i];
            current_.push_back(v);
            Bitset np = p & adj_[v];
            if (np.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(np));
            }
            current_.pop_back();
            p.reset(v);
            if (aborted_ || optimal()) return;
        }
    }

    const CliqueOptions& opt_;
    std::size_t n_;
    std::vector<std::size_t> order_, position_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> current_, best_;
    std::uint64_t nodes_ = 0;
    std::size_t target_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/// Maximum clique of g. With the default options the result is exact.
inline CliqueResult max_clique(const Graph& g, const CliqueOptions& opt = {}) {
    return detail::CliqueSearch(g, opt).run();
}

}  // namespace symwt
