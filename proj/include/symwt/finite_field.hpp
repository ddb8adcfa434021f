#pragma once

// Arithmetic in GF(p^m) through precomputed tables, univariate polynomials
// over such a field, irreducibility testing and enumeration, and the Moebius
// count of monic irreducibles.
//
// Elements are identified with their base-p encoding: the coefficient vector
// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... over GF(p) encodes as
// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. That integer is also the element's
// symbol label in Z_q, and the canonical element order is increasing encoding.

#include "symwt/count.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symwt {

struct Element {
    std::uint32_t value = 0;

    friend bool operator==(Element, Element) = default;
    friend auto operator<=>(Element, Element) = default;
};

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace detail {

// Dense polynomials over the prime field, ascending coefficients, trimmed.
using PrimePoly = std::vector<int>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            auto& c = a[static_cast<std::size_t>(i + shift)];
            c = ((c - lead * m[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

/// Monic polynomial of the given degree over GF(base) whose lower coefficients
/// are the base-`base` digits of index.
inline PrimePoly monic_from_index(int base, int degree, std::uint64_t index) {
    PrimePoly f(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(base));
        index /= static_cast<std::uint64_t>(base);
    }
    f[static_cast<std::size_t>(degree)] = 1;
    return f;
}

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree 1..deg/2.
inline bool prime_poly_irreducible(const PrimePoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int t = 1; 2 * t <= deg; ++t) {
        std::uint64_t count = 1;
        for (int i = 0; i < t; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (prime_poly_mod(f, monic_from_index(p, t, idx), p).empty()) return false;
    }
    return true;
}

}  // namespace detail

/// GF(p^m) with table-driven arithmetic. Immutable after construction.
class Field {
public:
    static constexpr int default_max_size = 64;

    /// The field of p^m elements. For m > 1 the modulus is the first monic
    /// irreducible of degree m in canonical order, checked by trial division.
    Field(int p, int m, int max_size = default_max_size) : p_(p), m_(m) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::int64_t q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        if (q > max_size) throw CapExceeded("field size " + std::to_string(q) + " exceeds limit " + std::to_string(max_size));
        q_ = static_cast<int>(q);
        if (m == 1) {
            modulus_ = {0, 1};
        } else {
            std::uint64_t idx = 0;
            for (;; ++idx) {
                auto cand = detail::monic_from_index(p, m, idx);
                if (detail::prime_poly_irreducible(cand, p)) {
                    modulus_ = std::move(cand);
                    break;
                }
            }
        }
        build_tables();
    }

    /// GF(q) for a prime power q.
    static Field of_order(int q, int max_size = default_max_size) {
        for (int p = 2; p <= q; ++p) {
            if (!is_prime(p) || q % p != 0) continue;
            int m = 0, x = q;
            while (x % p == 0) {
                x /= p;
                ++m;
            }
            if (x != 1) break;
            return Field(p, m, max_size);
        }
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int size() const { return q_; }
    /// Ascending coefficients over GF(p) of the defining polynomial (x for m = 1).
    const std::vector<int>& modulus() const { return modulus_; }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element element(std::uint32_t encoding) const {
        if (encoding >= static_cast<std::uint32_t>(q_)) throw std::out_of_range("element encoding out of range");
        return {encoding};
    }
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t v) const {
        return {static_cast<std::uint32_t>(((v % p_) + p_) % p_)};
    }

    Element add(Element a, Element b) const { return {add_[idx(a, b)]}; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const { return {neg_[a.value]}; }
    Element mul(Element a, Element b) const { return {mul_[idx(a, b)]}; }
    Element inv(Element a) const {
        if (a.value == 0) throw std::domain_error("inverse of zero");
        return {inv_[a.value]};
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const {
        Element r = one();
        while (e != 0) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }

    /// Nonzero elements in canonical order.
    std::vector<Element> nonzero_elements() const {
        std::vector<Element> v;
        for (int e = 1; e < q_; ++e) v.push_back({static_cast<std::uint32_t>(e)});
        return v;
    }

    /// Raw tables for hot loops: entry a*q+b.
    const std::vector<std::uint32_t>& add_table() const { return add_; }
    const std::vector<std::uint32_t>& mul_table() const { return mul_; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    std::size_t idx(Element a, Element b) const {
        return static_cast<std::size_t>(a.value) * static_cast<std::size_t>(q_) + b.value;
    }

    std::vector<int> digits(std::uint32_t e) const {
        std::vector<int> d(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            d[static_cast<std::size_t>(i)] = static_cast<int>(e % static_cast<std::uint32_t>(p_));
            e /= static_cast<std::uint32_t>(p_);
        }
        return d;
    }
    std::uint32_t encode(const std::vector<int>& d) const {
        std::uint32_t e = 0;
        for (int i = static_cast<int>(d.size()); i-- > 0;) e = e * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(d[static_cast<std::size_t>(i)]);
        return e;
    }

    void build_tables() {
        const auto q = static_cast<std::size_t>(q_);
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            const auto da = digits(a);
            std::vector<int> dn(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(dn);
            for (std::uint32_t b = 0; b < q; ++b) {
                const auto db = digits(b);
                std::vector<int> s(da.size());
                for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q + b] = encode(s);
                detail::PrimePoly prod(da.size() + db.size(), 0);
                for (std::size_t i = 0; i < da.size(); ++i)
                    for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                auto red = m_ == 1 ? (detail::trim(prod), prod) : detail::prime_poly_mod(prod, modulus_, p_);
                if (m_ == 1 && !red.empty()) red = {red[0] % p_};
                red.resize(static_cast<std::size_t>(m_), 0);
                mul_[a * q + b] = encode(red);
            }
        }
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) inv_[a] = b;
    }

    int p_ = 2;
    int m_ = 1;
    int q_ = 2;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

// ---------------------------------------------------------------------------
// Polynomials over a Field

/// Coefficients in ascending degree, trailing zeros trimmed. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Element> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Element> coeffs) : Polynomial(std::vector<Element>(coeffs)) {}

    static Polynomial constant(Element a) { return Polynomial({a}); }
    static Polynomial x() { return Polynomial({Element{0}, Element{1}}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().value == 1; }
    Element coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Element{0};
    }
    Element leading() const { return c_.empty() ? Element{0} : c_.back(); }
    const std::vector<Element>& coefficients() const { return c_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().value == 0) c_.pop_back();
    }
    std::vector<Element> c_;
};

inline Polynomial poly_add(const Field& F, const Polynomial& a, const Polynomial& b) {
    const int n = std::max(a.degree(), b.degree()) + 1;
    std::vector<Element> c(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = F.add(a.coeff(i), b.coeff(i));
    return Polynomial(std::move(c));
}

inline Polynomial poly_scale(const Field& F, const Polynomial& a, Element s) {
    std::vector<Element> c;
    for (const auto e : a.coefficients()) c.push_back(F.mul(e, s));
    return Polynomial(std::move(c));
}

inline Polynomial poly_sub(const Field& F, const Polynomial& a, const Polynomial& b) {
    return poly_add(F, a, poly_scale(F, b, F.neg(F.one())));
}

inline Polynomial poly_mul(const Field& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Element> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), Element{0});
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) {
            auto& t = c[static_cast<std::size_t>(i + j)];
            t = F.add(t, F.mul(a.coeff(i), b.coeff(j)));
        }
    return Polynomial(std::move(c));
}

/// Quotient and remainder; throws on division by the zero polynomial.
inline std::pair<Polynomial, Polynomial> poly_divmod(const Field& F, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Element> rem = a.coefficients();
    const int db = b.degree();
    const Element lead_inv = F.inv(b.leading());
    std::vector<Element> quo(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), Element{0});
    for (int i = a.degree(); i >= db; --i) {
        const Element c = F.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (c.value == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& t = rem[static_cast<std::size_t>(i - db + j)];
            t = F.sub(t, F.mul(c, b.coeff(j)));
        }
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

inline Polynomial poly_mod(const Field& F, const Polynomial& a, const Polynomial& m) {
    return poly_divmod(F, a, m).second;
}

inline Polynomial make_monic(const Field& F, const Polynomial& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.leading()));
}

inline Polynomial poly_gcd(const Field& F, Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline Element poly_eval(const Field& F, const Polynomial& f, Element x) {
    Element acc{0};
    for (int i = f.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), f.coeff(i));
    return acc;
}

/// Evaluations of f at every nonzero element in canonical order; the result
/// is a word over Z_q under the encoding labels.
inline std::vector<std::uint32_t> poly_eval_all(const Polynomial& f, const Field& F) {
    std::vector<std::uint32_t> w;
    w.reserve(static_cast<std::size_t>(F.size() - 1));
    for (int e = 1; e < F.size(); ++e) w.push_back(poly_eval(F, f, Element{static_cast<std::uint32_t>(e)}).value);
    return w;
}

/// a^e mod m by square and multiply.
inline Polynomial poly_powmod(const Field& F, Polynomial a, std::uint64_t e, const Polynomial& m) {
    Polynomial r = poly_mod(F, Polynomial::constant(F.one()), m);
    a = poly_mod(F, a, m);
    while (e != 0) {
        if (e & 1U) r = poly_mod(F, poly_mul(F, r, a), m);
        a = poly_mod(F, poly_mul(F, a, a), m);
        e >>= 1U;
    }
    return r;
}

inline bool has_root(const Field& F, const Polynomial& f) {
    for (int e = 0; e < F.size(); ++e)
        if (poly_eval(F, f, Element{static_cast<std::uint32_t>(e)}).value == 0) return true;
    return false;
}

/// Ben-Or test: f of degree t is irreducible iff gcd(f, x^{q^i} - x) = 1 for
/// every 1 <= i <= t/2.
inline bool is_irreducible(const Field& F, const Polynomial& f) {
    const int t = f.degree();
    if (t < 1) return false;
    if (t == 1) return true;
    const Polynomial fm = make_monic(F, f);
    const Polynomial x = Polynomial::x();
    Polynomial h = poly_mod(F, x, fm);
    for (int i = 1; 2 * i <= t; ++i) {
        h = poly_powmod(F, h, static_cast<std::uint64_t>(F.size()), fm);
        if (poly_gcd(F, fm, poly_sub(F, h, x)).degree() > 0) return false;
    }
    return true;
}

/// Irreducibility by trial division against every monic of degree 1..t/2.
inline bool is_irreducible_trial_division(const Field& F, const Polynomial& f);

/// The monic polynomial of degree t whose lower coefficients are the
/// base-q digits of index. Increasing index is the canonical order.
inline Polynomial monic_polynomial(const Field& F, int degree, std::uint64_t index) {
    std::vector<Element> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = Element{static_cast<std::uint32_t>(index % static_cast<std::uint64_t>(F.size()))};
        index /= static_cast<std::uint64_t>(F.size());
    }
    c[static_cast<std::size_t>(degree)] = F.one();
    return Polynomial(std::move(c));
}

inline std::uint64_t monic_count(const Field& F, int degree) {
    const Count c = power(F.size(), degree);
    require_under_cap(c, "monic polynomial enumeration");
    return c.convert_to<std::uint64_t>();
}

inline bool is_irreducible_trial_division(const Field& F, const Polynomial& f) {
    const int t = f.degree();
    if (t < 1) return false;
    for (int s = 1; 2 * s <= t; ++s) {
        const std::uint64_t count = monic_count(F, s);
        for (std::uint64_t i = 0; i < count; ++i)
            if (poly_mod(F, f, monic_polynomial(F, s, i)).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Counting and enumeration

inline int mobius(std::int64_t t) {
    if (t < 1) throw std::domain_error("mobius needs t >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= t; ++p) {
        if (t % p != 0) continue;
        t /= p;
        if (t % p == 0) return 0;
        sign = -sign;
    }
    if (t > 1) sign = -sign;
    return sign;
}

/// (1/t) sum_{s | t} mu(s) q^{t/s}.
inline Count count_monic_irreducibles(std::int64_t q, std::int64_t t) {
    if (t < 1) throw std::domain_error("count_monic_irreducibles needs t >= 1");
    Count sum = 0;
    for (std::int64_t s = 1; s <= t; ++s) {
        if (t % s != 0) continue;
        const int mu = mobius(s);
        if (mu == 0) continue;
        const Count term = power(q, t / s);
        if (mu > 0)
            sum += term;
        else
            sum -= term;
    }
    return sum / t;
}

/// Monic polynomials of degree t over GF(q) with no root in GF(q), by
/// inclusion-exclusion over sets of prescribed roots.
inline Count count_root_free_monic(std::int64_t q, std::int64_t t) {
    if (t < 0) return 0;
    Count sum = 0;
    for (std::int64_t j = 0; j <= std::min(q, t); ++j) {
        const Count term = binomial(q, j) * power(q, t - j);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

/// Streams every monic irreducible of degree t in canonical order.
template <class Visitor>
void enumerate_monic_irreducibles(const Field& F, int t, Visitor&& visit) {
    if (t < 1) throw std::invalid_argument("enumerate_monic_irreducibles needs t >= 1");
    const std::uint64_t count = monic_count(F, t);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto f = monic_polynomial(F, t, i);
        if (is_irreducible(F, f)) visit(f);
    }
}

/// Streams every monic polynomial of the given degree with no root in the
/// field, i.e. every product of monic irreducibles of degree >= 2. Degree 0
/// yields the constant 1; degree 1 yields nothing.
template <class Visitor>
void products_of_irreducibles_min_deg2(const Field& F, int degree, Visitor&& visit) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    if (degree == 0) {
        visit(Polynomial::constant(F.one()));
        return;
    }
    if (degree == 1) return;
    const std::uint64_t count = monic_count(F, degree);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto f = monic_polynomial(F, degree, i);
        if (!has_root(F, f)) visit(f);
    }
}

}  // namespace symwt
