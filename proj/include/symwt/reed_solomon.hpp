#pragma once

// Reed-Solomon codes evaluated on the nonzero field elements, their cosets,
// the constant-symbol-weight subcode built from polynomials with prescribed
// roots, the MDS weight distribution, and the exploratory search for
// low-weight multiples of irreducible polynomials.

#include "symwt/codes.hpp"
#include "symwt/count.hpp"
#include "symwt/finite_field.hpp"
#include "symwt/spaces.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symwt {

/// Materialisation limit for streamed codes.
inline constexpr std::uint64_t materialization_cap = 1'000'000;

namespace detail {

// Symbol weight of a word over Z_q with symbols < q, using a caller-provided
// scratch histogram of size q.
inline int symbol_weight_into(std::span<const Symbol> w, std::vector<int>& freq) {
    std::fill(freq.begin(), freq.end(), 0);
    int best = 0;
    for (const Symbol s : w) best = std::max(best, ++freq[s]);
    return best;
}

}  // namespace detail

/// RS[n = q-1, k] over GF(q): evaluations of all polynomials of degree < k at
/// the nonzero elements in canonical order.
class ReedSolomon {
public:
    ReedSolomon(const Field& F, int k) : F_(F), k_(k) {
        if (k < 1 || k > F.size() - 1) throw std::invalid_argument("Reed-Solomon needs 1 <= k <= q-1");
        const auto q = static_cast<std::size_t>(F.size());
        // pow_[j * q + x] = x^j for j = 0..n
        pow_.assign((static_cast<std::size_t>(n()) + 1) * q, 0);
        for (std::uint32_t x = 0; x < q; ++x) {
            Element acc = F.one();
            for (int j = 0; j <= n(); ++j) {
                pow_[static_cast<std::size_t>(j) * q + x] = acc.value;
                acc = F.mul(acc, Element{x});
            }
        }
    }

    const Field& field() const { return F_; }
    int n() const { return F_.size() - 1; }
    int k() const { return k_; }
    int q() const { return F_.size(); }
    int designed_distance() const { return n() - k_ + 1; }

    /// Codeword of a polynomial of degree < k.
    Word encode(const Polynomial& f) const {
        if (f.degree() >= k_) throw std::invalid_argument("encode: polynomial degree must be < k");
        return poly_eval_all(f, F_);
    }

    /// Message index m encodes the polynomial whose coefficients are the
    /// base-q digits of m (constant term first).
    Polynomial message_polynomial(std::uint64_t m) const {
        std::vector<Element> c(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) {
            c[static_cast<std::size_t>(i)] = Element{static_cast<std::uint32_t>(m % static_cast<std::uint64_t>(q()))};
            m /= static_cast<std::uint64_t>(q());
        }
        return Polynomial(std::move(c));
    }

    /// s_j = sum_x c_x x^j for j = 1..n-k; zero exactly on codewords.
    std::vector<Symbol> syndrome(std::span<const Symbol> w) const {
        if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("syndrome: word has wrong length");
        const auto qs = static_cast<std::size_t>(q());
        const auto& add = F_.add_table();
        const auto& mul = F_.mul_table();
        std::vector<Symbol> s(static_cast<std::size_t>(n() - k_), 0);
        for (int j = 1; j <= n() - k_; ++j) {
            Symbol acc = 0;
            for (int i = 0; i < n(); ++i) {
                const Symbol xj = pow_[static_cast<std::size_t>(j) * qs + static_cast<std::size_t>(i) + 1];
                acc = add[acc * qs + mul[w[static_cast<std::size_t>(i)] * qs + xj]];
            }
            s[static_cast<std::size_t>(j - 1)] = acc;
        }
        return s;
    }

    bool contains(std::span<const Symbol> w) const {
        const auto s = syndrome(w);
        return std::all_of(s.begin(), s.end(), [](Symbol v) { return v == 0; });
    }

    Count size() const { return power(q(), k_); }

    /// Streams every codeword in message-index order.
    template <class Visitor>
    void for_each_codeword(Visitor&& visit) const {
        require_under_cap(size(), "Reed-Solomon codeword enumeration");
        const std::uint64_t total = size().convert_to<std::uint64_t>();
        const auto qs = static_cast<std::size_t>(q());
        const auto& add = F_.add_table();
        const auto& mul = F_.mul_table();
        std::vector<Symbol> coeff(static_cast<std::size_t>(k_), 0);
        Word w(static_cast<std::size_t>(n()));
        for (std::uint64_t m = 0; m < total; ++m) {
            for (int i = 0; i < n(); ++i) {
                const std::size_t x = static_cast<std::size_t>(i) + 1;
                Symbol acc = 0;
                for (int j = k_ - 1; j >= 0; --j) acc = add[mul[acc * qs + x] * qs + coeff[static_cast<std::size_t>(j)]];
                w[static_cast<std::size_t>(i)] = acc;
            }
            visit(std::span<const Symbol>(w));
            for (auto& c : coeff) {
                if (++c < static_cast<Symbol>(q())) break;
                c = 0;
            }
        }
    }

    Code materialize() const {
        if (size() > Count(std::min(enumeration_cap(), materialization_cap)))
            throw CapExceeded("Reed-Solomon code too large to materialise");
        std::vector<Word> words;
        for_each_codeword([&](std::span<const Symbol> w) { words.emplace_back(w.begin(), w.end()); });
        return Code(n(), q(), std::move(words));
    }

private:
    Field F_;
    int k_;
    std::vector<Symbol> pow_;
};

// ---------------------------------------------------------------------------
// Cosets

struct CosetIntersection {
    Word representative;               ///< a word of the best coset (smallest in lex order)
    Count count;                       ///< |best coset intersected with SW(n,q,r)|
    std::vector<Count> per_coset;      ///< indexed by syndrome in base-q order
};

/// Scans all of Z_q^n and tallies words of symbol weight exactly r by coset
/// of RS[n,k]; returns a coset with the largest tally.
inline CosetIntersection best_coset_intersection(const Field& F, int k, int r) {
    const ReedSolomon rs(F, k);
    const int n = rs.n();
    if (r < 1 || r > n) throw std::invalid_argument("best_coset_intersection needs 1 <= r <= n");
    require_under_cap(power(F.size(), n), "coset scan");
    const std::size_t cosets = power(F.size(), n - k).convert_to<std::size_t>();
    std::vector<std::uint64_t> tally(cosets, 0);
    std::vector<std::optional<Word>> first(cosets);
    std::vector<int> freq(static_cast<std::size_t>(F.size()));
    for_each_word(WordSpace::hamming(n, F.size()), [&](std::span<const Symbol> w) {
        const auto s = rs.syndrome(w);
        std::size_t idx = 0;
        for (std::size_t j = s.size(); j-- > 0;) idx = idx * static_cast<std::size_t>(F.size()) + s[j];
        if (!first[idx]) first[idx] = Word(w.begin(), w.end());
        if (detail::symbol_weight_into(w, freq) == r) ++tally[idx];
    });
    CosetIntersection out;
    std::size_t best = 0;
    for (std::size_t i = 0; i < cosets; ++i) {
        out.per_coset.emplace_back(tally[i]);
        if (tally[i] > tally[best]) best = i;
    }
    out.count = tally[best];
    out.representative = *first[best];
    return out;
}

// ---------------------------------------------------------------------------
// Constant-symbol-weight subcode

struct RsCswOptions {
    /// Half-open range of indices into the canonical list of root-free g;
    /// lets callers split the stream into disjoint pieces.
    std::uint64_t g_begin = 0;
    std::uint64_t g_end = UINT64_MAX;
};

/// Monic polynomials of degree t with no root in F, in canonical order.
inline std::vector<Polynomial> root_free_monics(const Field& F, int t) {
    std::vector<Polynomial> out;
    products_of_irreducibles_min_deg2(F, t, [&](const Polynomial& g) { out.push_back(g); });
    return out;
}

inline void require_csw_hypothesis(const Field& F, int k, int r) {
    const int n = F.size() - 1;
    if (!(k - 1 >= r && 2 * r >= n && r >= 1 && k <= n))
        throw NotApplicable("rs_csw_subcode needs k-1 >= r >= n/2 with n = q-1");
}

/// Number of words the subcode stream emits: (q-1) C(n,r) times the number
/// of root-free monics of degree k-1-r.
inline Count rs_csw_subcode_size(const Field& F, int k, int r) {
    require_csw_hypothesis(F, k, r);
    const int n = F.size() - 1;
    return Count(n) * binomial(n, r) * count_root_free_monic(F.size(), k - 1 - r);
}

/// Streams the codewords beta (x - a_1)...(x - a_r) g(x) of RS[n,k] for every
/// beta in F*, every r-subset of F* (lexicographic), and every root-free
/// monic g of degree k-1-r. Each word has exactly r zeros and at most
/// n - r <= r of every other value, so symbol weight exactly r. Different
/// triples give different polynomials and hence different words.
///
/// visit(word, g_index, subset, beta)
template <class Visitor>
void rs_csw_subcode(const Field& F, int k, int r, Visitor&& visit, const RsCswOptions& opt = {}) {
    require_csw_hypothesis(F, k, r);
    const int q = F.size();
    const int n = q - 1;
    const auto qs = static_cast<std::size_t>(q);
    const auto& mul = F.mul_table();
    const auto& add = F.add_table();

    const auto gs = root_free_monics(F, k - 1 - r);
    const std::uint64_t g_end = std::min<std::uint64_t>(opt.g_end, gs.size());

    // Evaluations of every prescribed-root product, subsets in lex order.
    std::vector<std::vector<Symbol>> subsets;
    std::vector<Word> root_evals;
    {
        std::vector<Symbol> sub(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) sub[static_cast<std::size_t>(i)] = static_cast<Symbol>(i + 1);
        for (;;) {
            Word ev(static_cast<std::size_t>(n));
            for (int x = 1; x <= n; ++x) {
                Symbol acc = 1;
                for (const Symbol a : sub) acc = mul[acc * qs + add[static_cast<std::size_t>(x) * qs + F.neg(Element{a}).value]];
                ev[static_cast<std::size_t>(x - 1)] = acc;
            }
            subsets.push_back(sub);
            root_evals.push_back(std::move(ev));
            int i = r - 1;
            while (i >= 0 && sub[static_cast<std::size_t>(i)] == static_cast<Symbol>(n - (r - 1 - i))) --i;
            if (i < 0) break;
            ++sub[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j) sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    Word base(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (std::uint64_t gi = opt.g_begin; gi < g_end; ++gi) {
        const auto gev = poly_eval_all(gs[gi], F);
        for (std::size_t si = 0; si < root_evals.size(); ++si) {
            const auto& ev = root_evals[si];
            for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = mul[ev[static_cast<std::size_t>(i)] * qs + gev[static_cast<std::size_t>(i)]];
            for (Symbol beta = 1; beta < static_cast<Symbol>(q); ++beta) {
                for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = mul[beta * qs + base[static_cast<std::size_t>(i)]];
                visit(std::span<const Symbol>(w), gi, std::span<const Symbol>(subsets[si]), beta);
            }
        }
    }
}

/// The polynomial behind one streamed word.
inline Polynomial rs_csw_polynomial(const Field& F, const Polynomial& g, std::span<const Symbol> roots, Symbol beta) {
    Polynomial f = poly_scale(F, g, Element{beta});
    for (const Symbol a : roots) f = poly_mul(F, f, Polynomial({F.neg(Element{a}), F.one()}));
    return f;
}

// ---------------------------------------------------------------------------
// Weight statistics

/// Number of codewords of RS[n,k] by symbol weight (index 0..n), by scan.
inline std::vector<Count> symbol_weight_census(const Field& F, int k) {
    const ReedSolomon rs(F, k);
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(rs.n()) + 1, 0);
    std::vector<int> freq(static_cast<std::size_t>(F.size()));
    rs.for_each_codeword([&](std::span<const Symbol> w) { ++tally[static_cast<std::size_t>(detail::symbol_weight_into(w, freq))]; });
    return {tally.begin(), tally.end()};
}

/// |S(r)|: codewords of RS[q-1,k] with symbol weight exactly r, by scan.
inline Count enumerate_S_r(const Field& F, int k, int r) {
    if (r < 1 || r > k - 1) throw std::invalid_argument("enumerate_S_r needs 1 <= r <= k-1");
    return symbol_weight_census(F, k)[static_cast<std::size_t>(r)];
}

/// Number of codewords of each Hamming weight (index 0..n), by scan.
inline std::vector<Count> weight_distribution_by_scan(const Field& F, int k) {
    const ReedSolomon rs(F, k);
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(rs.n()) + 1, 0);
    rs.for_each_codeword([&](std::span<const Symbol> w) {
        std::size_t wt = 0;
        for (const Symbol s : w) wt += s != 0 ? 1 : 0;
        ++tally[wt];
    });
    return {tally.begin(), tally.end()};
}

struct WeightDistribution {
    int n = 0;
    int k = 0;
    std::int64_t q = 0;
    std::vector<Count> B;  ///< B[w] for w = 0..n

    Count total() const {
        Count s = 0;
        for (const auto& b : B) s += b;
        return s;
    }
};

/// Weight distribution of an [n,k] MDS code over GF(q):
/// B_{n-r} = C(n, n-r) sum_{j=0}^{k-r-1} (-1)^j C(n-r, j) (q^{k-r-j} - 1),
/// with B_0 = 1 and B_w = 0 for 0 < w < n-k+1.
inline WeightDistribution mds_weight_distribution(int n, int k, std::int64_t q) {
    if (n < 1 || k < 1 || k > n || q < 2) throw std::invalid_argument("mds_weight_distribution needs 1 <= k <= n, q >= 2");
    WeightDistribution wd{n, k, q, std::vector<Count>(static_cast<std::size_t>(n) + 1, 0)};
    wd.B[0] = 1;
    for (int r = 0; r < n; ++r) {
        Count sum = 0;
        for (int j = 0; j <= k - r - 1; ++j) {
            const Count term = binomial(n - r, j) * (power(q, k - r - j) - 1);
            if (j % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        wd.B[static_cast<std::size_t>(n - r)] = binomial(n, n - r) * sum;
    }
    return wd;
}

/// Leading term C(n, n-r) (q^{k-r} - 1) of B_{n-r}; an upper bound on B_{n-r}
/// when q > (n-r)/(1 - 1/q).
inline Count mds_weight_upper(int n, int k, std::int64_t q, int r) {
    if (k - r <= 0) return 0;
    return binomial(n, n - r) * (power(q, k - r) - 1);
}

/// The hypothesis q > (n-r)/(1 - 1/q), which is q - 1 > n - r.
inline bool mds_weight_upper_applies(int n, std::int64_t q, int r) {
    return q - 1 > static_cast<std::int64_t>(n - r);
}

/// Ceiling on |S(r)|: q (q-1) B_{n-r}.
inline Count symbol_weight_ceiling(const WeightDistribution& wd, int r) {
    return Count(wd.q) * (wd.q - 1) * wd.B[static_cast<std::size_t>(wd.n - r)];
}

// ---------------------------------------------------------------------------
// Low-weight multiples of irreducible polynomials

struct ConjectureOptions {
    /// Test only this polynomial instead of every irreducible of degree k-1-r.
    std::optional<Polynomial> only_g;
    /// Keep a record for every polynomial, not only failures.
    bool record_all = false;
};

struct ConjectureRecord {
    Polynomial g;
    bool success = false;
    std::vector<Symbol> witness;  ///< the roots, when success
    std::uint64_t subsets_tried = 0;
};

struct ConjectureReport {
    int q = 0;
    int k = 0;
    int r = 0;
    bool in_range = false;  ///< (k-1)/2 <= r < k < n
    bool skipped = false;   ///< degree k-1-r = 1: an irreducible g of degree 1 is a root factor
    std::string note;
    std::uint64_t polynomials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::vector<ConjectureRecord> records;
};

inline bool conjecture_in_range(int q, int k, int r) {
    const int n = q - 1;
    return k - 1 <= 2 * r && r < k && k < n && r >= 1;
}

namespace detail {

// First r-subset of F* (lexicographic) making the product with g have symbol
// weight exactly r.
inline ConjectureRecord search_roots(const Field& F, const Polynomial& g, int r) {
    const int n = F.size() - 1;
    const auto qs = static_cast<std::size_t>(F.size());
    const auto& mul = F.mul_table();
    const auto& add = F.add_table();
    const auto gev = poly_eval_all(g, F);
    // lin[a][x] = x - a
    std::vector<Word> lin(qs, Word(static_cast<std::size_t>(n)));
    for (std::uint32_t a = 1; a < qs; ++a)
        for (int x = 1; x <= n; ++x) lin[a][static_cast<std::size_t>(x - 1)] = add[static_cast<std::size_t>(x) * qs + F.neg(Element{a}).value];

    ConjectureRecord rec;
    rec.g = g;
    if (r > n) return rec;
    std::vector<Symbol> sub(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) sub[static_cast<std::size_t>(i)] = static_cast<Symbol>(i + 1);
    Word w(static_cast<std::size_t>(n));
    std::vector<int> freq(qs);
    for (;;) {
        ++rec.subsets_tried;
        w = gev;
        for (const Symbol a : sub)
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = mul[w[static_cast<std::size_t>(i)] * qs + lin[a][static_cast<std::size_t>(i)]];
        if (symbol_weight_into(w, freq) == r) {
            rec.success = true;
            rec.witness = sub;
            return rec;
        }
        int i = r - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == static_cast<Symbol>(n - (r - 1 - i))) --i;
        if (i < 0) break;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
    return rec;
}

}  // namespace detail

/// For every monic irreducible g of degree k-1-r (g = 1 when that degree is
/// 0), looks for r distinct nonzero points making (x-a_1)...(x-a_r) g(x) have
/// symbol weight exactly r. Subsets are tried in lexicographic order with
/// early exit. Degree 1 is skipped unless only_g is given, since a linear g
/// adds a root of its own.
inline ConjectureReport conjecture_check(const Field& F, int k, int r, const ConjectureOptions& opt = {}) {
    const int t = k - 1 - r;
    if (t < 0 || r < 1) throw std::invalid_argument("conjecture_check needs 1 <= r <= k-1");
    ConjectureReport rep;
    rep.q = F.size();
    rep.k = k;
    rep.r = r;
    rep.in_range = conjecture_in_range(F.size(), k, r);

    auto run = [&](const Polynomial& g) {
        auto rec = detail::search_roots(F, g, r);
        ++rep.polynomials;
        if (rec.success)
            ++rep.successes;
        else
            ++rep.failures;
        if (opt.record_all || !rec.success) rep.records.push_back(std::move(rec));
    };

    if (opt.only_g) {
        if (opt.only_g->degree() != t) throw std::invalid_argument("conjecture_check: g must have degree k-1-r");
        run(make_monic(F, *opt.only_g));
        return rep;
    }
    if (t == 0) {
        run(Polynomial::constant(F.one()));
    } else if (t == 1) {
        rep.skipped = true;
        rep.note = "a degree-1 g is a root factor, not a root-free one";
    } else {
        enumerate_monic_irreducibles(F, t, run);
    }
    return rep;
}

}  // namespace symwt
