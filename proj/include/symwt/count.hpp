#pragma once

// Exact counting primitives shared by every module: the arbitrary-precision
// Count type, binomials and multinomials, the global enumeration cap, and the
// error types used across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>

namespace symwt {

using Count = boost::multiprecision::cpp_int;

/// Raised when an enumeration would exceed the configured cap. Operations
/// refuse instead of truncating.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a bound or construction is evaluated outside its hypothesis.
class NotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

inline std::uint64_t cap_from_environment() {
    if (const char* env = std::getenv("SYMWT_ENUM_CAP"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return default_enumeration_cap;
}

inline std::atomic<std::uint64_t>& cap_storage() {
    static std::atomic<std::uint64_t> cap{cap_from_environment()};
    return cap;
}

}  // namespace detail

/// Maximum number of objects any single enumeration may visit. Defaults to
/// 10^7, overridable by SYMWT_ENUM_CAP or set_enumeration_cap().
inline std::uint64_t enumeration_cap() { return detail::cap_storage().load(std::memory_order_relaxed); }

inline void set_enumeration_cap(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
    detail::cap_storage().store(cap, std::memory_order_relaxed);
}

/// Restores the previous cap on scope exit.
class ScopedEnumerationCap {
public:
    explicit ScopedEnumerationCap(std::uint64_t cap) : saved_(enumeration_cap()) { set_enumeration_cap(cap); }
    ~ScopedEnumerationCap() { set_enumeration_cap(saved_); }
    ScopedEnumerationCap(const ScopedEnumerationCap&) = delete;
    ScopedEnumerationCap& operator=(const ScopedEnumerationCap&) = delete;

private:
    std::uint64_t saved_;
};

inline void require_under_cap(const Count& size, const std::string& what) {
    if (size > Count(enumeration_cap())) {
        throw CapExceeded(what + ": " + size.str() + " objects exceeds enumeration cap " +
                          std::to_string(enumeration_cap()));
    }
}

inline Count binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Count factorial(std::int64_t n) {
    Count r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Count power(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    return boost::multiprecision::pow(Count(base), static_cast<unsigned>(exp));
}

/// n! / (k_1! ... k_m!) with n = sum of parts.
template <class Int>
Count multinomial(std::span<const Int> parts) {
    Count r = 1;
    std::int64_t total = 0;
    for (const Int p : parts) {
        if (p < 0) return 0;
        total += static_cast<std::int64_t>(p);
        r *= binomial(total, static_cast<std::int64_t>(p));
    }
    return r;
}

/// Falling factorial q (q-1) ... (q-terms+1).
inline Count falling_factorial(std::int64_t q, std::int64_t terms) {
    Count r = 1;
    for (std::int64_t i = 0; i < terms; ++i) r *= q - i;
    return r;
}

/// ceil(a / b) for non-negative a and positive b.
inline Count ceil_div(const Count& a, const Count& b) {
    if (b <= 0) throw std::domain_error("ceil_div by non-positive value");
    Count q = a / b;
    if (q * b < a) ++q;
    return q;
}

/// Natural logarithm of a positive Count without overflowing double.
inline double log_count(const Count& x) {
    if (x <= 0) throw std::domain_error("log of non-positive count");
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 1000) return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 64;
    const Count top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// log base q of a positive Count.
inline double log_q(const Count& x, double q) { return log_count(x) / std::log(q); }

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace symwt
