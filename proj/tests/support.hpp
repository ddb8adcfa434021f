#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit tests.

#include "symwt/symwt.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using symwt::Composition;
using symwt::Symbol;
using symwt::Word;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed'5717);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Uniform random composition of n into q parts (stars and bars).
inline Composition random_composition(int n, int q) {
    // q-1 distinct bar positions among n+q-1 slots.
    std::vector<int> slots(static_cast<std::size_t>(n + q - 1));
    for (int i = 0; i < n + q - 1; ++i) slots[static_cast<std::size_t>(i)] = i;
    std::shuffle(slots.begin(), slots.end(), rng());
    std::vector<int> chosen(slots.begin(), slots.begin() + (q - 1));
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> parts;
    int prev = -1;
    for (const int b : chosen) {
        parts.push_back(b - prev - 1);
        prev = b;
    }
    parts.push_back(n + q - 2 - prev);
    return Composition(parts);
}

inline Word random_word(int n, int q) {
    Word w(static_cast<std::size_t>(n));
    for (auto& s : w) s = static_cast<Symbol>(uniform(0, q - 1));
    return w;
}

/// Max symbol frequency, computed without the library.
inline int weight_of(const Word& w, int q) {
    std::vector<int> f(static_cast<std::size_t>(q), 0);
    int m = 0;
    for (const auto s : w) m = std::max(m, ++f[s]);
    return m;
}

/// Visits every word of Z_q^n in lexicographic order.
template <class F>
void all_words(int n, int q, F&& f) {
    Word w(static_cast<std::size_t>(n), 0);
    for (;;) {
        f(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == static_cast<Symbol>(q - 1)) w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

/// Counts words of Z_q^n by symbol weight: index r holds |SW(n,q,r)|.
inline std::vector<std::uint64_t> weight_census(int n, int q) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    all_words(n, q, [&](const Word& w) { ++c[static_cast<std::size_t>(weight_of(w, q))]; });
    return c;
}

/// Largest code with minimum distance >= d among the given words, by plain
/// recursive branching (no bounding beyond the remaining count).
inline std::size_t naive_max_code(const std::vector<Word>& words, int d) {
    std::size_t best = 0;
    std::vector<std::size_t> chosen;
    auto dist = [](const Word& a, const Word& b) {
        int x = 0;
        for (std::size_t i = 0; i < a.size(); ++i) x += a[i] != b[i];
        return x;
    };
    auto rec = [&](auto& self, std::size_t start) -> void {
        best = std::max(best, chosen.size());
        if (chosen.size() + (words.size() - start) <= best) return;
        for (std::size_t i = start; i < words.size(); ++i) {
            bool ok = true;
            for (const auto c : chosen)
                if (dist(words[c], words[i]) < d) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace testsupport
