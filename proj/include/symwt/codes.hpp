#pragma once

// Words, codes and the brute-force oracles over them: symbol weight, minimum
// distance, word spaces, exhaustive optima by maximum clique, ball sizes, and
// the u|v and concatenation constructions with output audits.

#include "symwt/clique.hpp"
#include "symwt/compositions.hpp"
#include "symwt/count.hpp"
#include "symwt/spaces.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symwt {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Largest frequency of any symbol; 0 for the empty word.
inline int symbol_weight(std::span<const Symbol> w) {
    if (w.empty()) return 0;
    const Symbol top = *std::max_element(w.begin(), w.end());
    std::vector<int> freq(static_cast<std::size_t>(top) + 1, 0);
    int best = 0;
    for (const Symbol s : w) best = std::max(best, ++freq[s]);
    return best;
}

inline int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
    return d;
}

/// Symbol frequencies of w as a composition into q parts.
inline Composition composition_of(std::span<const Symbol> w, int q) {
    std::vector<int> parts(static_cast<std::size_t>(q), 0);
    for (const Symbol s : w) {
        if (s >= static_cast<Symbol>(q)) throw std::invalid_argument("symbol outside alphabet");
        ++parts[s];
    }
    return Composition(std::move(parts));
}

struct SymbolWeightProfile {
    int min = 0;
    int max = 0;
    bool constant() const { return min == max; }
};

/// A set of distinct words of common length n over Z_q. Metadata is computed
/// on first use and shared by copies.
class Code {
public:
    Code(int n, int q, std::vector<Word> words) : n_(n), q_(q), words_(std::move(words)), cache_(std::make_shared<Cache>()) {
        if (n < 1 || q < 1) throw std::invalid_argument("code needs n >= 1 and q >= 1");
        for (const auto& w : words_) {
            if (static_cast<int>(w.size()) != n) throw std::invalid_argument("code word has wrong length");
            for (const Symbol s : w)
                if (s >= static_cast<Symbol>(q)) throw std::invalid_argument("code word symbol outside alphabet");
        }
        auto sorted = words_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("code contains a repeated word");
    }

    int length() const { return n_; }
    int alphabet() const { return q_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }

    /// Minimum pairwise Hamming distance. Needs at least two words.
    int min_distance() const {
        if (words_.size() < 2) throw std::logic_error("minimum distance needs at least two words");
        std::call_once(cache_->distance_once, [&] {
            int best = n_;
            for (std::size_t i = 0; i < words_.size() && best > 0; ++i)
                for (std::size_t j = i + 1; j < words_.size(); ++j) best = std::min(best, hamming_distance(words_[i], words_[j]));
            cache_->min_distance = best;
        });
        return cache_->min_distance;
    }

    SymbolWeightProfile symbol_weights() const {
        if (words_.empty()) throw std::logic_error("symbol-weight profile of an empty code");
        std::call_once(cache_->weight_once, [&] {
            SymbolWeightProfile p{n_, 0};
            for (const auto& w : words_) {
                const int s = symbol_weight(w);
                p.min = std::min(p.min, s);
                p.max = std::max(p.max, s);
            }
            cache_->profile = p;
        });
        return cache_->profile;
    }

private:
    struct Cache {
        std::once_flag distance_once, weight_once;
        int min_distance = 0;
        SymbolWeightProfile profile;
    };

    int n_;
    int q_;
    std::vector<Word> words_;
    std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Word spaces

/// One of the ambient spaces codes live in: all of Z_q^n, SW(n,q,r),
/// SW(n,q,<=r), or the words realising a fixed composition.
struct WordSpace {
    enum class Kind { hamming, exact, bounded, composition };

    Kind kind = Kind::hamming;
    int n = 0;
    int q = 0;
    int r = 0;
    std::optional<Composition> comp;

    static WordSpace hamming(int n, int q) { return {Kind::hamming, n, q, n, std::nullopt}; }
    static WordSpace exact(int n, int q, int r) { return {Kind::exact, n, q, r, std::nullopt}; }
    static WordSpace bounded(int n, int q, int r) { return {Kind::bounded, n, q, r, std::nullopt}; }
    static WordSpace of_composition(const Composition& c) { return {Kind::composition, c.n(), c.q(), c.max_part(), c}; }

    static WordSpace of(const SpaceSpec& s) {
        return s.mode == WeightMode::exact ? exact(s.n, s.q, s.r) : bounded(s.n, s.q, s.r);
    }

    bool contains(std::span<const Symbol> w) const {
        if (static_cast<int>(w.size()) != n) return false;
        for (const Symbol s : w)
            if (s >= static_cast<Symbol>(q)) return false;
        switch (kind) {
            case Kind::hamming:
                return true;
            case Kind::exact:
                return symbol_weight(w) == r;
            case Kind::bounded:
                return symbol_weight(w) <= r;
            case Kind::composition:
                return composition_of(w, q) == *comp;
        }
        return false;
    }

    /// Exact number of words, from the counting formulas.
    Count size() const {
        switch (kind) {
            case Kind::hamming:
                return power(q, n);
            case Kind::exact:
                if (r < SpaceSpec{n, q, r, WeightMode::exact}.min_weight() || r > n) return 0;
                return size_constant_sw(n, q, r);
            case Kind::bounded:
                if (r < SpaceSpec{n, q, r, WeightMode::bounded}.min_weight()) return 0;
                return size_bounded_sw(n, q, std::min(r, n));
            case Kind::composition:
                return multinomial(comp->parts());
        }
        return 0;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::hamming:
                return "Z_" + std::to_string(q) + "^" + std::to_string(n);
            case Kind::exact:
                return "SW(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
            case Kind::bounded:
                return "SW(" + std::to_string(n) + "," + std::to_string(q) + ",<=" + std::to_string(r) + ")";
            case Kind::composition:
                return "[" + format_exponential(*comp) + "]";
        }
        return {};
    }
};

/// Visits every word of the space in lexicographic order. Hamming-type spaces
/// scan all q^n words; composition spaces walk multiset permutations.
template <class Visitor>
void for_each_word(const WordSpace& space, Visitor&& visit) {
    if (space.kind == WordSpace::Kind::composition) {
        require_under_cap(space.size(), "word enumeration of " + space.describe());
        Word w;
        for (int s = 0; s < space.q; ++s) w.insert(w.end(), static_cast<std::size_t>((*space.comp)[static_cast<std::size_t>(s)]), static_cast<Symbol>(s));
        do {
            visit(std::span<const Symbol>(w));
        } while (std::next_permutation(w.begin(), w.end()));
        return;
    }
    require_under_cap(power(space.q, space.n), "word enumeration of " + space.describe());
    Word w(static_cast<std::size_t>(space.n), 0);
    std::vector<int> freq(static_cast<std::size_t>(space.q), 0);
    freq[0] = space.n;
    const bool filtered = space.kind != WordSpace::Kind::hamming;
    for (;;) {
        if (!filtered || space.contains(w)) visit(std::span<const Symbol>(w));
        int i = space.n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] + 1 == static_cast<Symbol>(space.q)) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
}

inline std::vector<Word> enumerate_space(const WordSpace& space) {
    std::vector<Word> out;
    for_each_word(space, [&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
    return out;
}

/// Number of words of the space within Hamming distance radius of center.
inline Count ball_size(std::span<const Symbol> center, int radius, const WordSpace& space) {
    if (static_cast<int>(center.size()) != space.n) throw std::invalid_argument("ball_size: center has wrong length");
    std::uint64_t count = 0;
    for_each_word(space, [&](std::span<const Symbol> w) {
        if (hamming_distance(center, w) <= radius) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Exhaustive optima

struct OptimumOptions {
    /// Branch-and-bound node budget; 0 means unlimited (always exact).
    std::uint64_t node_limit = 0;
};

struct OptimumResult {
    Count size;             ///< best code size found
    Count upper_bound;      ///< equals size when exact
    bool exact = true;
    std::vector<Word> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

// Words of the form 0^a 1^b 2^c ... with a >= b >= c >= ...: one per orbit of
// coordinate permutations combined with symbol relabelling.
inline bool is_orbit_representative(std::span<const Symbol> w) {
    if (w.empty() || w[0] != 0) return false;
    std::size_t run = 1, prev_run = w.size();
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (i < w.size() && w[i] == w[i - 1]) {
            ++run;
            continue;
        }
        if (run > prev_run) return false;
        if (i < w.size() && w[i] != w[i - 1] + 1) return false;
        prev_run = run;
        run = 1;
    }
    return true;
}

}  // namespace detail

/// Largest code in the space with minimum distance at least d, as a maximum
/// clique of the distance-at-least-d graph. The space is invariant under
/// coordinate permutations (and symbol relabelling outside composition
/// spaces), so the root branches only on one word per orbit.
inline OptimumResult exhaustive_optimum(const WordSpace& space, int d, const OptimumOptions& opt = {}) {
    if (d < 1) throw std::invalid_argument("exhaustive_optimum needs d >= 1");
    const auto words = enumerate_space(space);
    OptimumResult res;
    if (words.empty()) {
        res.size = res.upper_bound = 0;
        return res;
    }
    if (d == 1 || words.size() == 1) {
        res.size = res.upper_bound = words.size();
        res.witness = words;
        return res;
    }
    if (d > space.n) {
        res.size = res.upper_bound = 1;
        res.witness = {words.front()};
        return res;
    }
    const Graph g = Graph::from_predicate(words.size(), [&](std::size_t i, std::size_t j) {
        return hamming_distance(words[i], words[j]) >= d;
    });
    CliqueOptions copt;
    copt.node_limit = opt.node_limit;
    if (space.kind == WordSpace::Kind::composition) {
        copt.root_candidates = {0};
    } else {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (detail::is_orbit_representative(words[i])) copt.root_candidates.push_back(i);
    }
    const auto cr = max_clique(g, copt);
    res.size = cr.vertices.size();
    res.exact = cr.complete;
    res.upper_bound = cr.complete ? res.size : Count(cr.root_bound);
    res.nodes = cr.nodes;
    for (const auto v : cr.vertices) res.witness.push_back(words[v]);
    return res;
}

// ---------------------------------------------------------------------------
// Constructions

/// Parameters measured on a constructed code.
struct CodeAudit {
    std::size_t size = 0;
    std::optional<int> min_distance;  ///< absent for codes with fewer than two words
    SymbolWeightProfile symbol_weight;
};

inline CodeAudit audit_code(const Code& c) {
    CodeAudit a;
    a.size = c.size();
    if (c.size() >= 2) a.min_distance = c.min_distance();
    if (c.size() >= 1) a.symbol_weight = c.symbol_weights();
    return a;
}

struct Construction {
    Code code;
    CodeAudit audit;
};

/// The common frequency lambda when every word of c uses each of its q
/// symbols exactly lambda times; nullopt otherwise.
inline std::optional<int> fpa_multiplicity(const Code& c) {
    if (c.size() == 0 || c.length() % c.alphabet() != 0) return std::nullopt;
    const int lambda = c.length() / c.alphabet();
    for (const auto& w : c.words()) {
        const auto comp = composition_of(w, c.alphabet());
        for (const int p : comp.parts())
            if (p != lambda) return std::nullopt;
    }
    return lambda;
}

/// D = {(u, v) : u in c, v in fpa}. With c of constant symbol weight r and
/// fpa using every symbol r' times, D has length n + r'q, size |c||fpa|,
/// symbol weight r + r' and distance min(d, d'). All three are re-measured.
inline Construction uv_construct(const Code& c, const Code& fpa) {
    if (c.alphabet() != fpa.alphabet()) throw std::invalid_argument("u|v: codes must share the alphabet");
    if (c.size() == 0 || fpa.size() == 0) throw std::invalid_argument("u|v: codes must be non-empty");
    const auto rp = fpa_multiplicity(fpa);
    if (!rp) throw std::invalid_argument("u|v: second code is not a frequency permutation array");
    const auto prof = c.symbol_weights();
    if (!prof.constant()) throw std::invalid_argument("u|v: first code must have constant symbol weight");

    std::vector<Word> out;
    out.reserve(c.size() * fpa.size());
    for (const auto& u : c.words())
        for (const auto& v : fpa.words()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.push_back(std::move(w));
        }
    Code d(c.length() + fpa.length(), c.alphabet(), std::move(out));
    auto audit = audit_code(d);

    if (audit.size != c.size() * fpa.size()) throw std::logic_error("u|v audit: size mismatch");
    if (!audit.symbol_weight.constant() || audit.symbol_weight.max != prof.max + *rp)
        throw std::logic_error("u|v audit: symbol weight is not r + r'");
    std::optional<int> expect;
    if (c.size() >= 2) expect = c.min_distance();
    if (fpa.size() >= 2) expect = expect ? std::min(*expect, fpa.min_distance()) : fpa.min_distance();
    if (audit.min_distance != expect) throw std::logic_error("u|v audit: distance is not min(d, d')");
    return {std::move(d), audit};
}

/// Replaces each symbol s of every outer word by the s-th inner word. The
/// inner code is an FPA over Z_p with each symbol r times and at least q
/// words; the result has length n r p, symbol weight exactly n r, and
/// distance at least d d'.
inline Construction concat_construct(const Code& outer, const Code& inner) {
    if (inner.size() < static_cast<std::size_t>(outer.alphabet()))
        throw std::invalid_argument("concatenation: inner code needs at least q words");
    const auto r = fpa_multiplicity(inner);
    if (!r) throw std::invalid_argument("concatenation: inner code is not a frequency permutation array");

    std::vector<Word> out;
    out.reserve(outer.size());
    for (const auto& u : outer.words()) {
        Word w;
        w.reserve(static_cast<std::size_t>(outer.length() * inner.length()));
        for (const Symbol s : u) {
            const auto& v = inner.words()[s];
            w.insert(w.end(), v.begin(), v.end());
        }
        out.push_back(std::move(w));
    }
    Code d(outer.length() * inner.length(), inner.alphabet(), std::move(out));
    auto audit = audit_code(d);

    if (audit.size != outer.size()) throw std::logic_error("concatenation audit: size mismatch");
    if (!audit.symbol_weight.constant() || audit.symbol_weight.max != outer.length() * *r)
        throw std::logic_error("concatenation audit: symbol weight is not n r");
    if (outer.size() >= 2) {
        // Distance of the inner words actually used.
        int dinner = inner.length();
        for (Symbol a = 0; a < static_cast<Symbol>(outer.alphabet()); ++a)
            for (Symbol b = a + 1; b < static_cast<Symbol>(outer.alphabet()); ++b)
                dinner = std::min(dinner, hamming_distance(inner.words()[a], inner.words()[b]));
        if (*audit.min_distance < outer.min_distance() * dinner)
            throw std::logic_error("concatenation audit: distance below d d'");
    }
    return {std::move(d), audit};
}

}  // namespace symwt
