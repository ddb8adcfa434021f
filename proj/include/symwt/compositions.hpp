#pragma once

// Compositions of n into q ordered non-negative parts: bounded-part counting,
// colex enumeration under a symbol-weight filter, the d+ metric, refinement,
// and anticode search in (N, d+).

#include "symwt/clique.hpp"
#include "symwt/count.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symwt {

/// An ordered vector of q non-negative symbol frequencies summing to n.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
        for (const int p : parts_)
            if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int n() const { return n_; }
    int q() const { return static_cast<int>(parts_.size()); }

    /// Largest part; the symbol weight of every word realising this composition.
    int max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

    /// Number of parts equal to v.
    int multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

    /// Parts sorted in non-increasing order: the orbit representative under
    /// relabelling of symbols.
    Composition sorted() const {
        auto p = parts_;
        std::sort(p.begin(), p.end(), std::greater<>());
        return Composition(std::move(p));
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Which compositions an enumeration keeps.
struct WeightFilter {
    enum class Kind { all, exact, bounded };
    Kind kind = Kind::all;
    int r = 0;

    static WeightFilter all() { return {Kind::all, 0}; }
    static WeightFilter exact(int r) { return {Kind::exact, r}; }
    static WeightFilter bounded(int r) { return {Kind::bounded, r}; }
};

/// Set of compositions sharing (n, q), tagged with how they were produced.
struct CompositionFamily {
    enum class Kind { all, exact_weight, bounded_weight, anticode };

    int n = 0;
    int q = 0;
    Kind kind = Kind::all;
    int r = 0;  ///< symbol weight for exact/bounded/anticode kinds
    int d = 0;  ///< minimum pairwise d+ for the anticode kind
    std::vector<Composition> members;

    std::size_t size() const { return members.size(); }
};

// ---------------------------------------------------------------------------
// Counting

/// |P(N,K,R)|: compositions of N into K parts each in [0, R], by
/// inclusion-exclusion over the parts that overflow R.
inline Count count_bounded_compositions(std::int64_t N, std::int64_t K, std::int64_t R) {
    if (N < 0 || R < 0) return 0;
    if (K == 0) return N == 0 ? 1 : 0;
    if (K < 0) throw std::invalid_argument("count_bounded_compositions: K must be non-negative");
    Count total = 0;
    for (std::int64_t i = 0; i <= K; ++i) {
        const std::int64_t top = K + N - (R + 1) * i - 1;
        if (top < K - 1) break;
        const Count term = binomial(K, i) * binomial(top, K - 1);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Number of compositions of n into q parts admitted by the filter.
inline Count count_compositions(int n, int q, WeightFilter filter) {
    switch (filter.kind) {
        case WeightFilter::Kind::all:
            return binomial(n + q - 1, q - 1);
        case WeightFilter::Kind::bounded:
            return count_bounded_compositions(n, q, filter.r);
        case WeightFilter::Kind::exact:
            if (filter.r < 0) return 0;
            return count_bounded_compositions(n, q, filter.r) - count_bounded_compositions(n, q, filter.r - 1);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

template <class Visitor>
void colex_compositions(std::vector<int>& parts, int pos, int remaining, int bound, Visitor& visit) {
    if (pos == 0) {
        if (remaining <= bound) {
            parts[0] = remaining;
            visit(std::span<const int>(parts));
        }
        return;
    }
    const int top = std::min(bound, remaining);
    for (int v = 0; v <= top; ++v) {
        const int rest = remaining - v;
        if (static_cast<std::int64_t>(rest) > static_cast<std::int64_t>(pos) * bound) continue;
        parts[static_cast<std::size_t>(pos)] = v;
        colex_compositions(parts, pos - 1, rest, bound, visit);
    }
}

}  // namespace detail

/// Streams every admitted composition of n into q parts, in colexicographic
/// order of the parts vector (the last part varies slowest). Refuses with
/// CapExceeded when the family is larger than the enumeration cap.
template <class Visitor>
void for_each_composition(int n, int q, WeightFilter filter, Visitor&& visit) {
    if (n < 0 || q < 1) throw std::invalid_argument("for_each_composition: need n >= 0 and q >= 1");
    require_under_cap(count_compositions(n, q, filter), "composition enumeration");
    const int bound = filter.kind == WeightFilter::Kind::all ? n : filter.r;
    if (bound < 0) return;
    std::vector<int> parts(static_cast<std::size_t>(q), 0);
    if (filter.kind == WeightFilter::Kind::exact) {
        auto keep = [&](std::span<const int> p) {
            if (*std::max_element(p.begin(), p.end()) == filter.r) visit(p);
        };
        detail::colex_compositions(parts, q - 1, n, bound, keep);
    } else {
        detail::colex_compositions(parts, q - 1, n, bound, visit);
    }
}

inline CompositionFamily enumerate_compositions(int n, int q, WeightFilter filter) {
    CompositionFamily fam;
    fam.n = n;
    fam.q = q;
    fam.r = filter.r;
    switch (filter.kind) {
        case WeightFilter::Kind::all: fam.kind = CompositionFamily::Kind::all; break;
        case WeightFilter::Kind::exact: fam.kind = CompositionFamily::Kind::exact_weight; break;
        case WeightFilter::Kind::bounded: fam.kind = CompositionFamily::Kind::bounded_weight; break;
    }
    for_each_composition(n, q, filter, [&](std::span<const int> p) {
        fam.members.emplace_back(std::vector<int>(p.begin(), p.end()));
    });
    return fam;
}

// ---------------------------------------------------------------------------
// Metrics

namespace detail {
inline void require_same_shape(const Composition& a, const Composition& b, const char* op) {
    if (a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument(std::string(op) + ": compositions must share (n, q)");
}
}  // namespace detail

/// d+(a, b) = n - sum_i min(a_i, b_i) = sum_i (a_i - b_i)^+.
inline int dplus(std::span<const int> a, std::span<const int> b) {
    int common = 0, n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        common += std::min(a[i], b[i]);
        n += a[i];
    }
    return n - common;
}

inline int dplus(const Composition& a, const Composition& b) {
    detail::require_same_shape(a, b, "dplus");
    return dplus(a.parts(), b.parts());
}

/// Number of indices where the parts differ.
inline int hamming_distance_compositions(const Composition& a, const Composition& b) {
    detail::require_same_shape(a, b, "hamming_distance_compositions");
    int d = 0;
    for (int i = 0; i < a.q(); ++i) d += a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)];
    return d;
}

/// Smallest non-zero |a_i - b_i|, or 0 when a == b.
inline int min_nonzero_gap(const Composition& a, const Composition& b) {
    detail::require_same_shape(a, b, "min_nonzero_gap");
    int gap = 0;
    for (int i = 0; i < a.q(); ++i) {
        const int g = std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
        if (g != 0 && (gap == 0 || g < gap)) gap = g;
    }
    return gap;
}

// ---------------------------------------------------------------------------
// Refinement

/// Index sets I_0..I_{p-1} of the fine composition, one per coarse part.
using PartitionWitness = std::vector<std::vector<int>>;

namespace detail {

class RefinementSearch {
public:
    RefinementSearch(const Composition& fine, const Composition& coarse) : fine_(fine), coarse_(coarse) {
        remaining_.assign(coarse.parts().begin(), coarse.parts().end());
        groups_.assign(static_cast<std::size_t>(coarse.q()), {});
        for (int i = 0; i < fine.q(); ++i)
            if (fine[static_cast<std::size_t>(i)] > 0) items_.push_back(i);
        std::stable_sort(items_.begin(), items_.end(), [&](int a, int b) {
            return fine[static_cast<std::size_t>(a)] > fine[static_cast<std::size_t>(b)];
        });
    }

    std::optional<PartitionWitness> run() {
        if (!place(0)) return std::nullopt;
        // zero parts join any group
        for (int i = 0; i < fine_.q(); ++i)
            if (fine_[static_cast<std::size_t>(i)] == 0) groups_[0].push_back(i);
        for (auto& g : groups_) std::sort(g.begin(), g.end());
        return groups_;
    }

private:
    bool place(std::size_t k) {
        if (k == items_.size())
            return std::all_of(remaining_.begin(), remaining_.end(), [](int r) { return r == 0; });
        const int idx = items_[k];
        const int v = fine_[static_cast<std::size_t>(idx)];
        std::vector<int> tried;
        for (std::size_t j = 0; j < remaining_.size(); ++j) {
            if (remaining_[j] < v) continue;
            if (std::find(tried.begin(), tried.end(), remaining_[j]) != tried.end()) continue;
            tried.push_back(remaining_[j]);
            remaining_[j] -= v;
            groups_[j].push_back(idx);
            if (place(k + 1)) return true;
            groups_[j].pop_back();
            remaining_[j] += v;
        }
        return false;
    }

    const Composition& fine_;
    const Composition& coarse_;
    std::vector<int> items_;
    std::vector<int> remaining_;
    PartitionWitness groups_;
};

}  // namespace detail

/// Whether `fine` refines `coarse`: its indices split into one group per
/// coarse part with matching sums. Returns a witness partition when it does.
/// Groups for zero coarse parts may be empty.
inline std::optional<PartitionWitness> refinement_witness(const Composition& fine, const Composition& coarse) {
    if (fine.n() != coarse.n()) return std::nullopt;
    return detail::RefinementSearch(fine, coarse).run();
}

inline bool is_refinement(const Composition& fine, const Composition& coarse) {
    return refinement_witness(fine, coarse).has_value();
}

// ---------------------------------------------------------------------------
// Anticodes

enum class SearchStrategy { greedy, exhaustive };

/// Largest member count the exhaustive anticode search will build a
/// compatibility graph for.
inline constexpr std::size_t exhaustive_anticode_limit = 16384;

inline bool is_anticode(const std::vector<Composition>& members, int d) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (dplus(members[i], members[j]) < d) return false;
    return true;
}

/// A family of symbol-weight-r compositions of n into q parts with pairwise
/// d+ >= d. Greedy scans N(r) in descending colex order and keeps each
/// composition that is far enough from all kept ones; exhaustive returns a
/// maximum family.
inline CompositionFamily search_anticode(int n, int q, int r, int d, SearchStrategy strategy) {
    if (n < 0 || q < 1) throw std::invalid_argument("search_anticode: need n >= 0 and q >= 1");
    if (r < ceil_div(std::int64_t{n}, std::int64_t{q}) || r > n)
        throw std::invalid_argument("search_anticode: need ceil(n/q) <= r <= n");
    if (d < 1) throw std::invalid_argument("search_anticode: need d >= 1");

    CompositionFamily fam;
    fam.n = n;
    fam.q = q;
    fam.kind = CompositionFamily::Kind::anticode;
    fam.r = r;
    fam.d = d;

    if (strategy == SearchStrategy::greedy) {
        std::vector<int> flat;
        for_each_composition(n, q, WeightFilter::exact(r), [&](std::span<const int> p) { flat.insert(flat.end(), p.begin(), p.end()); });
        const auto qs = static_cast<std::size_t>(q);
        std::vector<std::span<const int>> kept;
        for (std::size_t end = flat.size(); end >= qs; end -= qs) {
            const std::span<const int> p(flat.data() + end - qs, qs);
            bool far = true;
            for (const auto& k : kept)
                if (dplus(p, k) < d) {
                    far = false;
                    break;
                }
            if (far) kept.push_back(p);
        }
        for (const auto& k : kept) fam.members.emplace_back(std::vector<int>(k.begin(), k.end()));
        return fam;
    }

    const auto all = enumerate_compositions(n, q, WeightFilter::exact(r));
    if (all.size() > exhaustive_anticode_limit)
        throw CapExceeded("search_anticode: " + std::to_string(all.size()) +
                          " compositions is too many for exhaustive search");
    const auto& m = all.members;
    const Graph g = Graph::from_predicate(m.size(), [&](std::size_t i, std::size_t j) {
        return dplus(m[i].parts(), m[j].parts()) >= d;
    });
    // Relabelling symbols permutes parts and preserves d+, so each orbit has a
    // non-increasing representative; some maximum family contains one.
    CliqueOptions opt;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (std::is_sorted(m[i].parts().begin(), m[i].parts().end(), std::greater<>())) opt.root_candidates.push_back(i);
    const auto res = max_clique(g, opt);
    for (const auto v : res.vertices) fam.members.push_back(m[v]);
    return fam;
}

// ---------------------------------------------------------------------------
// Exponential notation: whitespace-separated tokens `v^t` (v repeated t
// times) or `v` (t = 1), concatenated left to right.

inline Composition parse_exponential(std::string_view text) {
    std::vector<int> parts;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        try {
            std::size_t used = 0;
            const int v = std::stoi(token.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? token.size() : caret)) throw std::invalid_argument(token);
            int t = 1;
            if (caret != std::string::npos) {
                const auto rest = token.substr(caret + 1);
                t = std::stoi(rest, &used);
                if (used != rest.size()) throw std::invalid_argument(token);
            }
            if (v < 0 || t < 0) throw std::invalid_argument(token);
            parts.insert(parts.end(), static_cast<std::size_t>(t), v);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad exponential-notation token '" + token + "'");
        }
    }
    if (parts.empty()) throw std::invalid_argument("empty composition");
    return Composition(std::move(parts));
}

inline std::string format_exponential(const Composition& c) {
    std::ostringstream out;
    const auto p = c.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (i != 0) out << ' ';
        out << p[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

}  // namespace symwt
