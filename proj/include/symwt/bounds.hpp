#pragma once

// Upper and lower bounds on the largest code with minimum distance d inside
// SW(n,q,r) or SW(n,q,<=r), both as exact sizes and as asymptotic rates.
// Every result names the formula that produced it. The CCC oracle supplies
// lower bounds on constant-composition codes, including values inherited
// through refinement.

#include "symwt/codes.hpp"
#include "symwt/compositions.hpp"
#include "symwt/count.hpp"
#include "symwt/spaces.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symwt {

enum class Direction { lower, upper };
enum class ValueKind { exact_size, rate };

inline const char* to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }
inline const char* to_string(ValueKind k) { return k == ValueKind::exact_size ? "size" : "rate"; }

struct BoundInputs {
    int n = 0;
    int q = 0;
    int d = 0;
    int r = 0;
    WeightMode mode = WeightMode::exact;
    double rho = std::numeric_limits<double>::quiet_NaN();
    double delta = std::numeric_limits<double>::quiet_NaN();
};

struct BoundResult {
    Direction direction = Direction::lower;
    ValueKind kind = ValueKind::exact_size;
    Count value;                                              ///< for exact_size results
    double rate = std::numeric_limits<double>::quiet_NaN();   ///< for rate results
    std::string provenance;
    BoundInputs inputs;
    bool exact = false;    ///< the value is the true optimum
    bool clamped = false;  ///< a negative rate was raised to 0
    std::vector<std::string> breakdown;
};

namespace detail {

inline BoundResult size_result(Direction dir, Count v, std::string prov, BoundInputs in) {
    BoundResult b;
    b.direction = dir;
    b.kind = ValueKind::exact_size;
    b.value = std::move(v);
    b.provenance = std::move(prov);
    b.inputs = in;
    return b;
}

inline BoundResult rate_result(Direction dir, double v, std::string prov, BoundInputs in) {
    BoundResult b;
    b.direction = dir;
    b.kind = ValueKind::rate;
    b.rate = v;
    b.provenance = std::move(prov);
    b.inputs = in;
    return b;
}

inline void require_delta(double delta, double q) {
    if (!(delta >= 0.0 && delta <= (q - 1.0) / q + 1e-12)) throw std::domain_error("delta must lie in [0, (q-1)/q]");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rate bounds

/// Gilbert-Varshamov type rate: h_q(1-rho) - h_q(delta) in SW(n,q,r),
/// 1 - h_q(delta) in SW(n,q,<=r); with q growing, 1-rho-delta and 1-delta.
/// Negative values are clamped to 0 and flagged.
inline BoundResult gv_rate_lower(const AsymptoticRegime& regime, WeightMode mode) {
    regime.validate();
    BoundInputs in;
    in.mode = mode;
    in.rho = regime.rho;
    in.delta = regime.delta;
    double v = 0;
    if (regime.constant_q()) {
        const double q = regime.q();
        in.q = regime.q();
        if (!(regime.delta > 0.0)) throw std::domain_error("gv_rate_lower needs delta > 0");
        detail::require_delta(regime.delta, q);
        const double hd = entropy_q(std::min(regime.delta, (q - 1.0) / q), q);
        v = mode == WeightMode::exact ? entropy_q(1.0 - regime.rho, q) - hd : 1.0 - hd;
    } else {
        v = mode == WeightMode::exact ? 1.0 - regime.rho - regime.delta : 1.0 - regime.delta;
    }
    auto b = detail::rate_result(Direction::lower, v, mode == WeightMode::exact ? "gv-rate-exact" : "gv-rate-bounded", in);
    if (v < 0) {
        b.rate = 0;
        b.clamped = true;
    }
    return b;
}

/// k_q(x) = (q-1)/q - (q-2)x/q - (2/q) sqrt((q-1) x (1-x)).
inline double lp_k(double x, double q) {
    return (q - 1.0) / q - (q - 2.0) * x / q - (2.0 / q) * std::sqrt((q - 1.0) * x * (1.0 - x));
}

/// Aaltonen's linear-programming rate bound h_q(k_q(delta)).
inline BoundResult lp_rate_upper(double delta, int q) {
    if (q < 2) throw std::domain_error("lp_rate_upper needs q >= 2");
    detail::require_delta(delta, q);
    BoundInputs in;
    in.q = q;
    in.delta = delta;
    const double k = std::clamp(lp_k(delta, q), 0.0, (q - 1.0) / q);
    return detail::rate_result(Direction::upper, entropy_q(k, q), "lp-aaltonen", in);
}

/// Singleton rate 1 - delta.
inline BoundResult singleton_rate_upper(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("delta must lie in [0,1]");
    BoundInputs in;
    in.delta = delta;
    return detail::rate_result(Direction::upper, 1.0 - delta, "singleton-rate", in);
}

/// Rate bound for large symbol weight, valid when rho <= 2/3 and delta >= rho:
/// h_q(1 - 3rho/2) - (1-rho) h_q((1 - 3rho/2)/(1-rho)) + 1 - 3rho/2 for fixed
/// q, and 1 - 3rho/2 when q grows (q = nullopt).
inline BoundResult large_r_rate_upper(double rho, double delta, std::optional<int> q) {
    if (!(rho >= 0.0 && rho <= 2.0 / 3.0 + 1e-12)) throw NotApplicable("large-weight rate bound needs rho <= 2/3");
    if (!(delta >= rho)) throw NotApplicable("large-weight rate bound needs delta >= rho");
    BoundInputs in;
    in.rho = rho;
    in.delta = delta;
    const double x = std::max(0.0, 1.0 - 1.5 * rho);
    double v = x;
    if (q) {
        if (*q < 2) throw std::domain_error("large_r_rate_upper needs q >= 2");
        in.q = *q;
        const double y = rho < 1.0 ? std::clamp(x / (1.0 - rho), 0.0, 1.0) : 0.0;
        v = entropy_q(x, *q) - (1.0 - rho) * entropy_q(y, *q) + x;
    }
    return detail::rate_result(Direction::upper, v, q ? "large-weight-rate" : "large-weight-rate-growing-q", in);
}

// ---------------------------------------------------------------------------
// Exact-size upper bounds

/// q^{n-d+1}.
inline BoundResult singleton_upper(int n, int d, int q) {
    if (d < 1 || d > n) throw std::invalid_argument("singleton_upper needs 1 <= d <= n");
    BoundInputs in{n, q, d};
    return detail::size_result(Direction::upper, power(q, n - d + 1), "singleton", in);
}

/// Exactly q when d >= r and 3r > 2n (no two words of symbol weight r > 2n/3
/// can share their most frequent symbol at distance >= r, and the q shifts
/// x + a1 reach q). Only for SW(n,q,r).
inline std::optional<BoundResult> trivial_q_regime(int n, int d, int r, int q) {
    if (!(d >= r && 3 * r > 2 * n && r <= n && d <= n && q >= 1)) return std::nullopt;
    BoundInputs in{n, q, d, r};
    auto b = detail::size_result(Direction::upper, q, "large-weight-exact-q", in);
    b.exact = true;
    return b;
}

/// A(n,d,r) <= floor(n q / (n-r) A(n-1,d,r)), iterated down to the first
/// length n' with 3r > 2n', where the value q is exact.
inline BoundResult johnson_upper(int n, int d, int r, int q) {
    if (d < r) throw NotApplicable("johnson_upper needs d >= r to anchor the recursion");
    if (r >= n) throw NotApplicable("johnson_upper needs r < n");
    if (r < 1 || q < 1) throw std::invalid_argument("johnson_upper needs r >= 1 and q >= 1");
    int anchor = n;
    while (3 * r <= 2 * anchor) --anchor;
    BoundInputs in{n, q, d, r};
    Count v = q;
    auto b = detail::size_result(Direction::upper, 0, "johnson-recursion", in);
    b.breakdown.push_back("A(" + std::to_string(anchor) + ") <= " + std::to_string(q));
    for (int m = anchor + 1; m <= n; ++m) {
        v = (Count(m) * q * v) / (m - r);
        b.breakdown.push_back("A(" + std::to_string(m) + ") <= " + v.str());
    }
    b.value = v;
    return b;
}

/// q (q-1) ... (q-n+d) for r = 1 and q > n.
inline BoundResult dukes_upper(int n, int d, int q) {
    if (q <= n) throw NotApplicable("dukes_upper needs q > n");
    if (d < 1 || d > n) throw std::invalid_argument("dukes_upper needs 1 <= d <= n");
    BoundInputs in{n, q, d, 1};
    return detail::size_result(Direction::upper, falling_factorial(q, n - d + 1), "dukes-falling-factorial", in);
}

// ---------------------------------------------------------------------------
// Binary constant-weight codes

struct CWTableEntry {
    int q = 0;  ///< length
    int d = 0;  ///< even distance
    int w = 0;  ///< weight, w <= q/2
    Count value;
    bool exact = true;
    std::string source;
};

/// Values of A_2(q, d, w) transcribed from the published tables. Keys use
/// even d and w <= q/2.
inline const std::vector<CWTableEntry>& cw_table() {
    static const std::vector<CWTableEntry> table = [] {
        const std::string brouwer = "Brouwer, table of constant weight codes";
        const std::string agrell = "Agrell, Vardy, Zeger (2000), table of constant weight codes";
        std::vector<CWTableEntry> t{
            {6, 4, 3, 4, true, brouwer},   {7, 4, 3, 7, true, brouwer},   {8, 4, 3, 8, true, brouwer},
            {9, 4, 3, 12, true, brouwer},  {10, 4, 3, 13, true, brouwer}, {8, 4, 4, 14, true, agrell},
            {9, 4, 4, 18, true, brouwer},  {9, 6, 4, 3, true, brouwer},   {10, 6, 4, 5, true, brouwer},
            {10, 6, 5, 6, true, brouwer},  {16, 14, 8, 2, true, agrell},  {16, 6, 8, 120, false, agrell},
        };
        return t;
    }();
    return table;
}

/// Lower bound on A_2(q, d2, k): the best of the elementary exact values, the
/// table, and C(q,k) / sum_{i=0}^{d2-2} C(k,i) C(q-k,i) rounded up. Odd d2 is
/// raised to the next even value.
inline BoundResult cw_lower(int q, int d2, int k) {
    if (q < 1 || k < 0 || k > q) throw std::invalid_argument("cw_lower needs 0 <= k <= q");
    if (d2 < 1) throw std::invalid_argument("cw_lower needs d >= 1");
    const int d = d2 + (d2 % 2);
    const int w = std::min(k, q - k);
    BoundInputs in{q, 2, d2, k};

    Count denom = 0;
    for (int i = 0; i <= d - 2; ++i) denom += binomial(k, i) * binomial(q - k, i);
    const Count gv = ceil_div(binomial(q, k), denom);
    auto best = detail::size_result(Direction::lower, gv, "cw-gv", in);

    auto consider = [&](const Count& v, const std::string& prov, bool exact) {
        if (v > best.value || (v == best.value && exact && !best.exact)) {
            best.value = v;
            best.provenance = prov;
            best.exact = exact;
        }
    };
    if (d <= 2)
        consider(binomial(q, k), "cw-whole-space", true);
    else if (w == 0 || d > 2 * w)
        consider(1, "cw-single-word", true);
    else if (d == 2 * w)
        consider(q / w, "cw-disjoint-supports", true);
    for (const auto& e : cw_table())
        if (e.q == q && e.d == d && e.w == w) consider(e.value, "cw-table: " + e.source, e.exact);
    return best;
}

/// Both of Levenshtein's conditions for the constant-weight GV quotient to
/// grow exponentially: k inside (q/2)(1 -+ sqrt(1 - 4d/q)) and d <= k(1-k/q).
inline bool levenshtein_significance(int q, int d, int k) {
    if (q < 1 || 4.0 * d > q) return false;
    const double rad = std::sqrt(1.0 - 4.0 * d / q);
    const double lo = q / 2.0 * (1.0 - rad), hi = q / 2.0 * (1.0 + rad);
    return k >= lo - 1e-12 && k <= hi + 1e-12 && d <= k * (1.0 - static_cast<double>(k) / q) + 1e-12;
}

// ---------------------------------------------------------------------------
// Permutation anticodes

/// Derangement numbers D_0..D_r.
inline std::vector<Count> derangements(int r) {
    std::vector<Count> D(static_cast<std::size_t>(std::max(r, 1)) + 1);
    D[0] = 1;
    D[1] = 0;
    for (int i = 2; i <= r; ++i) D[static_cast<std::size_t>(i)] = Count(i - 1) * (D[static_cast<std::size_t>(i) - 1] + D[static_cast<std::size_t>(i) - 2]);
    return D;
}

/// Number of permutations of S_r within Hamming distance radius of a fixed one.
inline Count perm_ball_volume(int r, int radius) {
    const auto D = derangements(r);
    Count v = 0;
    for (int i = 0; i <= std::min(radius, r); ++i) v += binomial(r, i) * D[static_cast<std::size_t>(i)];
    return v;
}

/// ceil(r! / V(2d-1, S_r)): compositions of r(r+1)/2 into r distinct parts
/// 1..r, arranged by a permutation code of distance 2d, are pairwise d apart.
inline BoundResult perm_anticode_lower(int r, int d) {
    if (r < 1 || d < 1) throw std::invalid_argument("perm_anticode_lower needs r >= 1 and d >= 1");
    BoundInputs in{r * (r + 1) / 2, r, d, r};
    auto b = detail::size_result(Direction::lower, ceil_div(factorial(r), perm_ball_volume(r, 2 * d - 1)), "perm-anticode-gv", in);
    b.breakdown.push_back(factorial(r).str() + " / " + perm_ball_volume(r, 2 * d - 1).str());
    return b;
}

// ---------------------------------------------------------------------------
// The CCC oracle

/// Lower bounds on A_q(composition, d). Entries are literature or computed
/// values; a query inherits the value of any entry it refines. Small
/// compositions without an entry are solved by exhaustive search.
class CccOracle {
public:
    struct Entry {
        Composition composition;
        Count value;
        std::optional<int> d;  ///< distance the value holds for; any d when absent
        std::string source;
    };
    struct Answer {
        Count value;
        std::string provenance;
    };

    void add(Composition c, Count value, std::optional<int> d = std::nullopt, std::string source = "user") {
        if (value < 1) throw std::invalid_argument("CCC oracle values must be >= 1");
        entries_.push_back({std::move(c), std::move(value), d, std::move(source)});
    }

    /// Parses "<exponential notation>[@d]:<count>", e.g. "1^4 5^4:4096".
    void add_spec(std::string_view spec, std::string source = "user") {
        const auto colon = spec.rfind(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("CCC oracle entry needs 'composition:count'");
        auto lhs = spec.substr(0, colon);
        std::optional<int> d;
        if (const auto at = lhs.find('@'); at != std::string_view::npos) {
            d = std::stoi(std::string(lhs.substr(at + 1)));
            lhs = lhs.substr(0, at);
        }
        Count v;
        try {
            v = Count(std::string(spec.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad CCC oracle count in '" + std::string(spec) + "'");
        }
        add(parse_exponential(lhs), v, d, std::move(source));
    }

    const std::vector<Entry>& entries() const { return entries_; }

    /// Largest space (number of words) solved by exhaustive search; 0 disables.
    void set_search_limit(std::uint64_t words, std::uint64_t node_limit = 200000) {
        search_limit_ = words;
        node_limit_ = node_limit;
    }

    Answer lookup(const Composition& c, int d) const {
        Answer best{1, "ccc-single-word"};
        for (const auto& e : entries_) {
            if (e.composition.n() != c.n() || (e.d && *e.d < d)) continue;
            if (e.value > best.value && is_refinement(c, e.composition))
                best = {e.value, "ccc-oracle[" + format_exponential(e.composition) + "] " + e.source};
        }
        if (search_limit_ != 0) {
            const Count words = multinomial(c.parts());
            if (words <= Count(search_limit_) && words > best.value) {
                const auto opt = exhaustive_optimum(WordSpace::of_composition(c), d, {node_limit_});
                if (opt.size > best.value) best = {opt.size, opt.exact ? "ccc-exhaustive" : "ccc-search-incumbent"};
            }
        }
        return best;
    }

private:
    std::vector<Entry> entries_;
    std::uint64_t search_limit_ = 0;
    std::uint64_t node_limit_ = 200000;
};

// ---------------------------------------------------------------------------
// Composed lower bounds

/// The composition with r in its first k parts and the remaining n - rk
/// spread as evenly as possible over the other q - k parts: t parts of
/// ceil((n-rk)/(q-k)) followed by the rest at the floor, where t is the
/// remainder. nullopt when the parts cannot stay below r.
inline std::optional<Composition> near_uniform_composition(int n, int q, int k, int r) {
    if (k < 1 || k > q || r < 1) return std::nullopt;
    const int rest = n - r * k;
    if (rest < 0) return std::nullopt;
    std::vector<int> parts(static_cast<std::size_t>(k), r);
    if (q == k) {
        if (rest != 0) return std::nullopt;
        return Composition(std::move(parts));
    }
    const int l0 = rest / (q - k), t = rest % (q - k);
    const int l1 = l0 + (t > 0 ? 1 : 0);
    if (l1 >= r) return std::nullopt;
    parts.insert(parts.end(), static_cast<std::size_t>(t), l1);
    parts.insert(parts.end(), static_cast<std::size_t>(q - k - t), l0);
    return Composition(std::move(parts));
}

/// Lower bound on A_q(n,d,r) in SW(n,q,r) from binary constant-weight codes
/// choosing which k symbols reach frequency r, times a CCC on the resulting
/// composition: max over k1 of
///     sum_{i=0}^{b} A_2(q, 2d, k1+2di) A_q(n(k1+2di), d),
/// with b = floor((floor(n/r) - k1) / 2d).
inline BoundResult csw_lower_sum(int n, int q, int d, int r, const CccOracle& oracle) {
    SpaceSpec{n, q, r, WeightMode::exact}.validate();
    if (d < 1) throw std::invalid_argument("csw_lower_sum needs d >= 1");
    BoundInputs in{n, q, d, r};
    auto best = detail::size_result(Direction::lower, 0, "composed-cw", in);
    const int kmax = std::min(n / r, q);
    for (int k1 = k0(n, q, r); k1 <= kmax; ++k1) {
        const int b = (n / r - k1) / (2 * d);
        Count sum = 0;
        std::vector<std::string> terms;
        for (int i = 0; i <= b; ++i) {
            const int k = k1 + 2 * d * i;
            if (k > kmax) break;
            const auto comp = near_uniform_composition(n, q, k, r);
            if (!comp) continue;
            const auto cw = cw_lower(q, 2 * d, k);
            const auto ccc = oracle.lookup(*comp, d);
            sum += cw.value * ccc.value;
            terms.push_back("A2(" + std::to_string(q) + "," + std::to_string(2 * d) + "," + std::to_string(k) + ")>=" + cw.value.str() + " [" + cw.provenance + "] x A(" +
                            format_exponential(*comp) + ")>=" + ccc.value.str() + " [" + ccc.provenance + "]");
        }
        if (sum > best.value) {
            best.value = sum;
            best.breakdown = terms;
            best.breakdown.insert(best.breakdown.begin(), "k1=" + std::to_string(k1) + " b=" + std::to_string(b));
        }
    }
    return best;
}

/// For compositions r^k l^{q-k} with a single lower part l (gap a = r - l),
/// the product A_2(q, ceil(2d/a), k) A_q(r^k l^{q-k}, d): two such
/// compositions differing in D places are D a / 2 apart in d+. Zero when no
/// k gives a single lower part.
inline BoundResult csw_lower_uniform_gap(int n, int q, int d, int r, const CccOracle& oracle) {
    SpaceSpec{n, q, r, WeightMode::exact}.validate();
    if (d < 1) throw std::invalid_argument("csw_lower_uniform_gap needs d >= 1");
    BoundInputs in{n, q, d, r};
    auto best = detail::size_result(Direction::lower, 0, "composed-cw-uniform-gap", in);
    const int kmax = std::min(n / r, q);
    for (int k = k0(n, q, r); k <= kmax; ++k) {
        const auto comp = near_uniform_composition(n, q, k, r);
        if (!comp || q == k) continue;
        const int rest = n - r * k;
        if (rest % (q - k) != 0) continue;
        const int gap = r - rest / (q - k);
        const int D = static_cast<int>(ceil_div(std::int64_t{2} * d, std::int64_t{gap}));
        const auto cw = cw_lower(q, D, k);
        const auto ccc = oracle.lookup(*comp, d);
        const Count v = cw.value * ccc.value;
        if (v > best.value) {
            best.value = v;
            best.breakdown = {"k=" + std::to_string(k) + " gap=" + std::to_string(gap) + " D=" + std::to_string(D),
                              "A2(" + std::to_string(q) + "," + std::to_string(D) + "," + std::to_string(k) + ")>=" + cw.value.str() + " [" + cw.provenance + "] x A(" +
                                  format_exponential(*comp) + ")>=" + ccc.value.str() + " [" + ccc.provenance + "]"};
        }
    }
    return best;
}

/// The better of csw_lower_sum and csw_lower_uniform_gap.
inline BoundResult csw_lower_composed(int n, int q, int d, int r, const CccOracle& oracle) {
    auto a = csw_lower_sum(n, q, d, r, oracle);
    auto b = csw_lower_uniform_gap(n, q, d, r, oracle);
    return b.value > a.value ? b : a;
}

/// max over ceil(n/q) <= s <= r of csw_lower_composed(n, q, d, s).
inline BoundResult bsw_lower_composed(int n, int q, int d, int r, const CccOracle& oracle) {
    SpaceSpec{n, q, r, WeightMode::bounded}.validate();
    BoundInputs in{n, q, d, r, WeightMode::bounded};
    auto best = detail::size_result(Direction::lower, 0, "composed-cw-bounded", in);
    const int lo = static_cast<int>(ceil_div(std::int64_t{n}, std::int64_t{q}));
    for (int s = lo; s <= r; ++s) {
        auto b = csw_lower_composed(n, q, d, s, oracle);
        if (b.value > best.value) {
            best.value = b.value;
            best.breakdown = b.breakdown;
            best.breakdown.insert(best.breakdown.begin(), "s=" + std::to_string(s) + " via " + b.provenance);
        }
    }
    return best;
}

/// Sum of the oracle values of the members of an anticode: codes on
/// compositions at d+ distance >= d are themselves at Hamming distance >= d.
inline BoundResult anticode_sum_lower(const CompositionFamily& family, int d, const CccOracle& oracle) {
    if (!is_anticode(family.members, d)) throw std::invalid_argument("anticode_sum_lower: family is not an anticode at distance d");
    BoundInputs in{family.n, family.q, d, family.r};
    auto b = detail::size_result(Direction::lower, 0, "anticode-sum", in);
    for (const auto& m : family.members) {
        const auto a = oracle.lookup(m, d);
        b.value += a.value;
        b.breakdown.push_back(format_exponential(m) + ": " + a.value.str() + " [" + a.provenance + "]");
    }
    return b;
}

// ---------------------------------------------------------------------------
// Aggregation

struct BestBoundsOptions {
    /// Run the exhaustive clique oracle when q^n is at most this.
    std::uint64_t exhaustive_limit = 729;
    /// Node budget for that search; 0 means unlimited.
    std::uint64_t node_limit = 0;
};

struct BestBounds {
    BoundResult lower;
    BoundResult upper;
    std::vector<BoundResult> all;
    bool consistent = true;  ///< every lower value <= every upper value
};

/// Every applicable finite bound for the instance plus, on tiny instances,
/// the exhaustive optimum.
inline BestBounds best_bounds(int n, int q, int d, int r, WeightMode mode, const CccOracle& oracle, const BestBoundsOptions& opt = {}) {
    if (n < 1 || q < 1 || d < 1 || d > n) throw std::invalid_argument("best_bounds needs n, q >= 1 and 1 <= d <= n");
    const SpaceSpec spec{n, q, r, mode};
    spec.validate();
    BoundInputs in{n, q, d, r, mode};
    std::vector<BoundResult> all;
    auto add = [&](BoundResult b) {
        b.inputs.mode = mode;
        all.push_back(std::move(b));
    };
    auto both = [&](const Count& v, const std::string& prov) {
        auto lo = detail::size_result(Direction::lower, v, prov, in);
        lo.exact = true;
        auto hi = lo;
        hi.direction = Direction::upper;
        add(std::move(lo));
        add(std::move(hi));
    };

    const Count space = space_size(spec);
    if (space == 0) {
        both(0, "empty-space");
    } else {
        add(detail::size_result(Direction::upper, space, "space-size", in));
        add(detail::size_result(Direction::lower, 1, "single-word", in));
        if (d == 1) both(space, "whole-space");
        add(singleton_upper(n, d, q));
        if (r == 1 && q > n) add(dukes_upper(n, d, q));

        if (mode == WeightMode::exact) {
            if (auto t = trivial_q_regime(n, d, r, q)) {
                auto lo = *t;
                lo.direction = Direction::lower;
                add(std::move(*t));
                add(std::move(lo));
            }
            if (d >= r && r < n) add(johnson_upper(n, d, r, q));
            add(csw_lower_sum(n, q, d, r, oracle));
            add(csw_lower_uniform_gap(n, q, d, r, oracle));
            if (q == r && 2 * n == r * (r + 1)) {
                auto p = perm_anticode_lower(r, d);
                std::vector<int> parts(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) parts[static_cast<std::size_t>(i)] = i + 1;
                const auto a = oracle.lookup(Composition(parts), d);
                p.value *= a.value;
                p.provenance = "perm-anticode-composed";
                p.inputs = in;
                p.breakdown.push_back("x A(" + format_exponential(Composition(parts)) + ")>=" + a.value.str() + " [" + a.provenance + "]");
                add(std::move(p));
            }
        } else {
            add(bsw_lower_composed(n, q, d, r, oracle));
            const int lo = spec.min_weight();
            for (int s = lo; s <= r; ++s)
                if (auto t = trivial_q_regime(n, d, s, q)) {
                    t->direction = Direction::lower;
                    t->exact = false;
                    t->provenance = "large-weight-exact-q at s=" + std::to_string(s);
                    t->inputs = in;
                    add(std::move(*t));
                }
        }

        if (power(q, n) <= Count(opt.exhaustive_limit)) {
            const auto ex = exhaustive_optimum(WordSpace::of(spec), d, {opt.node_limit});
            if (ex.exact) {
                both(ex.size, "exhaustive");
            } else {
                add(detail::size_result(Direction::lower, ex.size, "exhaustive-incumbent", in));
                add(detail::size_result(Direction::upper, ex.upper_bound, "exhaustive-colouring", in));
            }
        }
    }

    BestBounds out;
    const BoundResult* lo = nullptr;
    const BoundResult* hi = nullptr;
    for (const auto& b : all) {
        if (b.direction == Direction::lower && (!lo || b.value > lo->value || (b.value == lo->value && b.exact && !lo->exact))) lo = &b;
        if (b.direction == Direction::upper && (!hi || b.value < hi->value || (b.value == hi->value && b.exact && !hi->exact))) hi = &b;
    }
    out.lower = *lo;
    out.upper = *hi;
    out.consistent = out.lower.value <= out.upper.value;
    out.all = std::move(all);
    return out;
}

// ---------------------------------------------------------------------------
// Rate curves

struct CurveTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  ///< NaN where a bound does not apply
};

/// Samples the rate bounds over a grid. With fixed delta, rho runs over
/// [0, 1]; with fixed rho, delta runs over [0, (q-1)/q]. grid is the number of
/// intervals.
inline CurveTable rate_curves(int q, std::optional<double> fixed_delta, std::optional<double> fixed_rho, int grid) {
    if (q < 2) throw std::invalid_argument("rate_curves needs q >= 2");
    if (grid < 1) throw std::invalid_argument("rate_curves needs grid >= 1");
    if (fixed_delta.has_value() == fixed_rho.has_value()) throw std::invalid_argument("rate_curves needs exactly one of delta and rho");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CurveTable t;
    t.columns = {"rho", "delta", "gv_exact", "gv_bounded", "gv_exact_growing_q", "lp", "large_weight", "large_weight_growing_q", "singleton"};
    const double qmax = (q - 1.0) / q;
    for (int i = 0; i <= grid; ++i) {
        const double s = static_cast<double>(i) / grid;
        const double rho = fixed_rho ? *fixed_rho : s;
        const double delta = fixed_delta ? *fixed_delta : s * qmax;
        auto guard = [&](auto f) {
            try {
                return f();
            } catch (const std::exception&) {
                return nan;
            }
        };
        AsymptoticRegime reg{static_cast<double>(q), 0.0, rho, delta};
        AsymptoticRegime grow{1.0, 0.5, rho, delta};
        t.rows.push_back({
            rho,
            delta,
            guard([&] { return rho >= 1.0 / q && delta > 0 ? gv_rate_lower(reg, WeightMode::exact).rate : nan; }),
            guard([&] { return delta > 0 ? gv_rate_lower(reg, WeightMode::bounded).rate : nan; }),
            guard([&] { return gv_rate_lower(grow, WeightMode::exact).rate; }),
            guard([&] { return lp_rate_upper(delta, q).rate; }),
            guard([&] { return large_r_rate_upper(rho, delta, q).rate; }),
            guard([&] { return large_r_rate_upper(rho, delta, std::nullopt).rate; }),
            singleton_rate_upper(delta).rate,
        });
    }
    return t;
}

}  // namespace symwt
