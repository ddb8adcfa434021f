#pragma once

// Exact and asymptotic sizes of the constant symbol-weight space SW(n,q,r)
// and the bounded space SW(n,q,<=r), plus the q-ary entropy toolkit.

#include "symwt/compositions.hpp"
#include "symwt/count.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symwt {

enum class WeightMode { exact, bounded };

inline const char* to_string(WeightMode m) { return m == WeightMode::exact ? "exact" : "bounded"; }

struct SpaceSpec {
    int n = 0;
    int q = 0;
    int r = 0;
    WeightMode mode = WeightMode::exact;

    /// Pigeonhole lower limit on the symbol weight of any word.
    int min_weight() const { return static_cast<int>(ceil_div(std::int64_t{n}, std::int64_t{q})); }

    void validate() const {
        if (n < 1 || q < 1) throw std::invalid_argument("space needs n >= 1 and q >= 1");
        if (mode == WeightMode::exact && (r < min_weight() || r > n))
            throw std::invalid_argument("exact-weight space needs ceil(n/q) <= r <= n");
        if (mode == WeightMode::bounded && (r < 1 || r > n))
            throw std::invalid_argument("bounded-weight space needs 1 <= r <= n");
    }
};

/// Parameters of an asymptotic family: q = theta * n^epsilon, r/n -> rho,
/// d/n -> delta.
struct AsymptoticRegime {
    double theta = 2;
    double epsilon = 0;
    double rho = 0.5;
    double delta = 0.25;

    bool constant_q() const { return epsilon == 0.0; }
    /// Alphabet size when epsilon = 0.
    int q() const { return static_cast<int>(std::lround(theta)); }

    void validate() const {
        if (!(theta > 0)) throw std::invalid_argument("regime needs theta > 0");
        if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("regime needs epsilon in [0,1]");
        if (constant_q() && q() < 2) throw std::invalid_argument("constant-q regime needs q >= 2");
    }
};

/// Smallest number of symbols that reach frequency exactly r in a word of
/// symbol weight r.
inline int k0(int n, int q, int r) { return std::max(n - (r - 1) * q, 1); }

/// |N(r)|: compositions of n into q parts whose largest part is r, summed by
/// the number k of parts equal to r.
inline Count count_family_exact(int n, int q, int r) {
    SpaceSpec{n, q, r, WeightMode::exact}.validate();
    Count total = 0;
    for (int k = k0(n, q, r); k <= n / r && k <= q; ++k)
        total += binomial(q, k) * count_bounded_compositions(n - r * k, q - k, r - 1);
    return total;
}

namespace detail {

inline std::vector<Count> factorial_table(int n) {
    std::vector<Count> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int i = 1; i <= n; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i) - 1] * i;
    return f;
}

inline Count multinomial_from(const std::vector<Count>& fact, int total, std::span<const int> parts) {
    Count denom = 1;
    for (const int p : parts) denom *= fact[static_cast<std::size_t>(p)];
    return fact[static_cast<std::size_t>(total)] / denom;
}

}  // namespace detail

/// |SW(n,q,r)|: for each count k of symbols at frequency r, choose them,
/// place them, and fill the rest with words whose symbols each occur at most
/// r-1 times. The inner sum streams over P(n-rk, q-k, r-1).
inline Count size_constant_sw(int n, int q, int r) {
    SpaceSpec{n, q, r, WeightMode::exact}.validate();
    const auto fact = detail::factorial_table(n);
    Count total = 0;
    for (int k = k0(n, q, r); k <= n / r && k <= q; ++k) {
        const int rest = n - r * k;
        // n! / ((r!)^k rest!)
        Count outer = fact[static_cast<std::size_t>(n)] / fact[static_cast<std::size_t>(rest)];
        for (int i = 0; i < k; ++i) outer /= fact[static_cast<std::size_t>(r)];
        Count inner = 0;
        if (q - k == 0) {
            inner = rest == 0 ? 1 : 0;
        } else if (r - 1 >= 0) {
            for_each_composition(rest, q - k, WeightFilter::bounded(r - 1), [&](std::span<const int> x) {
                inner += detail::multinomial_from(fact, rest, x);
            });
        }
        total += binomial(q, k) * outer * inner;
    }
    return total;
}

/// |SW(n,q,r)| by summing the multinomial of every composition in N(r).
inline Count size_constant_sw_by_family(int n, int q, int r) {
    SpaceSpec{n, q, r, WeightMode::exact}.validate();
    const auto fact = detail::factorial_table(n);
    Count total = 0;
    for_each_composition(n, q, WeightFilter::exact(r), [&](std::span<const int> p) {
        total += detail::multinomial_from(fact, n, p);
    });
    return total;
}

/// |SW(n,q,<=r)|: sum of multinomials over P(n,q,r). Zero when r < ceil(n/q).
inline Count size_bounded_sw(int n, int q, int r) {
    SpaceSpec{n, q, r, WeightMode::bounded}.validate();
    if (r >= n) return power(q, n);
    const auto fact = detail::factorial_table(n);
    Count total = 0;
    for_each_composition(n, q, WeightFilter::bounded(r), [&](std::span<const int> p) {
        total += detail::multinomial_from(fact, n, p);
    });
    return total;
}

/// |SW(n,q,<=r)| by adding one symbol at a time:
/// f_j(m) = sum_{i<=min(r,m)} C(m,i) f_{j-1}(m-i). O(q n r) big-integer steps,
/// so it never hits the enumeration cap.
inline Count count_words_bounded_dp(int n, int q, int r) {
    if (n < 0 || q < 1) throw std::invalid_argument("count_words_bounded_dp needs n >= 0 and q >= 1");
    if (r < 0) return n == 0 ? 1 : 0;
    std::vector<Count> f(static_cast<std::size_t>(n) + 1, 0), g(f.size());
    f[0] = 1;
    for (int j = 0; j < q; ++j) {
        for (int m = 0; m <= n; ++m) {
            Count acc = 0;
            for (int i = 0; i <= std::min(r, m); ++i) acc += binomial(m, i) * f[static_cast<std::size_t>(m - i)];
            g[static_cast<std::size_t>(m)] = acc;
        }
        std::swap(f, g);
    }
    return f[static_cast<std::size_t>(n)];
}

/// Size of the space, through the dynamic program so that large (n, q) work.
inline Count space_size(const SpaceSpec& s) {
    s.validate();
    if (s.r < s.min_weight()) return 0;
    const Count upto = count_words_bounded_dp(s.n, s.q, s.r);
    if (s.mode == WeightMode::bounded) return upto;
    return upto - count_words_bounded_dp(s.n, s.q, s.r - 1);
}

// ---------------------------------------------------------------------------
// Entropy and rates

/// q-ary entropy h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with
/// h_q(0) = 0 and h_q(1) = log_q(q-1).
inline double entropy_q(double x, double q) {
    if (!(q >= 2)) throw std::domain_error("entropy_q needs q >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy_q needs 0 <= x <= 1");
    const double lq = std::log(q);
    double h = 0.0;
    if (x > 0.0) h += x * std::log(q - 1.0) / lq - x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log1p(-x) / lq;
    return h;
}

/// Limit of h_q(x) as q grows with n.
inline double entropy_large_q(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy needs 0 <= x <= 1");
    return x;
}

struct RateEstimate {
    double rate = 0;
    bool optimal_weight = false;  ///< r is the pigeonhole minimum ceil(n/q)
};

/// Leading term of (1/n) log_q |SW(n,q,r)| for r/n -> rho. o(1) terms are
/// not estimated.
inline RateEstimate asymptotic_rate_constant_sw(const AsymptoticRegime& regime) {
    regime.validate();
    if (!(regime.rho >= 0.0 && regime.rho <= 1.0)) throw std::domain_error("rho must lie in [0,1]");
    RateEstimate est;
    if (regime.constant_q()) {
        const int q = regime.q();
        const double floor_rho = 1.0 / q;
        if (regime.rho < floor_rho - 1e-12) throw std::domain_error("rho below the pigeonhole limit 1/q");
        if (regime.rho <= floor_rho + 1e-12) {
            est.rate = 1.0;
            est.optimal_weight = true;
        } else {
            est.rate = entropy_q(1.0 - regime.rho, q);
        }
    } else {
        // ceil(n/q) = o(n) when q grows, so rho = 0 is the optimal weight.
        est.optimal_weight = regime.rho == 0.0;
        est.rate = est.optimal_weight ? 1.0 : entropy_large_q(1.0 - regime.rho);
    }
    return est;
}

/// (1/n) log_q |SW(n,q,r)| computed exactly.
inline double finite_rate_constant_sw(int n, int q, int r) { return log_q(size_constant_sw(n, q, r), q) / n; }

/// Integer symbol weight nearest to rho*n, and the rounding deviation.
struct RoundedWeight {
    int r = 0;
    double deviation = 0;
};

inline RoundedWeight weight_for_rho(int n, double rho) {
    const double exact = rho * n;
    const int r = static_cast<int>(std::lround(exact));
    return {r, r - exact};
}

/// One row of a size table.
struct SizeRow {
    SpaceSpec spec;
    Count size;
    double rate = 0;  ///< (1/n) log_q size, NaN for an empty space
};

inline SizeRow size_row(const SpaceSpec& spec) {
    spec.validate();
    SizeRow row{spec, space_size(spec), std::nan("")};
    if (row.size > 0) row.rate = log_q(row.size, spec.q) / spec.n;
    return row;
}

}  // namespace symwt
