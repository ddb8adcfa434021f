#include "catch_amalgamated.hpp"
#include "support.hpp"

#include <set>

using namespace symwt;
using namespace testsupport;

namespace {

Code permutations_of(int q, std::size_t count) {
    Word w(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) w[static_cast<std::size_t>(i)] = static_cast<Symbol>(i);
    std::vector<Word> out;
    do out.push_back(w);
    while (out.size() < count && std::next_permutation(w.begin(), w.end()));
    return Code(q, q, out);
}

}  // namespace

TEST_CASE("symbol weight") {
    CHECK(symbol_weight(Word(7, 0)) == 7);
    CHECK(symbol_weight(Word{0, 1, 2, 2, 2, 3, 3, 3}) == 3);
    CHECK(symbol_weight(Word{4, 0, 3, 1, 2}) == 1);
    for (int it = 0; it < 500; ++it) {
        const int q = uniform(1, 9);
        const auto w = random_word(uniform(1, 20), q);
        REQUIRE(symbol_weight(w) == weight_of(w, q));
        REQUIRE(composition_of(w, q).max_part() == weight_of(w, q));
    }
}

TEST_CASE("code invariants") {
    std::vector<Word> rep;
    for (Symbol a = 0; a < 5; ++a) rep.push_back(Word(6, a));
    const Code c(6, 5, rep);
    CHECK(c.min_distance() == 6);
    CHECK(c.symbol_weights().min == 6);
    CHECK(c.symbol_weights().constant());
    CHECK_THROWS_AS(Code(3, 3, {{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Code(3, 3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Code(3, 3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Code(3, 3, {{0, 1, 2}}).min_distance(), std::logic_error);

    for (int it = 0; it < 100; ++it) {
        const int n = uniform(1, 8), q = uniform(2, 4);
        std::set<Word> ws;
        const int m = uniform(2, 12);
        for (int i = 0; i < m; ++i) ws.insert(random_word(n, q));
        if (ws.size() < 2) continue;
        const std::vector<Word> words(ws.begin(), ws.end());
        int d = n;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) d = std::min(d, hamming_distance(words[i], words[j]));
        REQUIRE(Code(n, q, words).min_distance() == d);
    }
}

TEST_CASE("word spaces") {
    for (int q = 1; q <= 4; ++q)
        for (int n = 1; n <= 6; ++n)
            for (int r = 1; r <= n; ++r) {
                for (const auto& s : {WordSpace::bounded(n, q, r), WordSpace::exact(n, q, r)}) {
                    std::uint64_t seen = 0;
                    bool ok = true;
                    for_each_word(s, [&](std::span<const Symbol> w) {
                        ++seen;
                        const int wt = weight_of(Word(w.begin(), w.end()), q);
                        ok = ok && (s.kind == WordSpace::Kind::exact ? wt == r : wt <= r) && s.contains(w);
                    });
                    REQUIRE(ok);
                    REQUIRE(Count(seen) == s.size());
                }
            }
    const auto comp = Composition{2, 1, 1};
    const auto words = enumerate_space(WordSpace::of_composition(comp));
    CHECK(words.size() == 12);
    for (const auto& w : words) CHECK(composition_of(w, 3) == comp);
    CHECK(WordSpace::hamming(3, 4).size() == 64);
}

TEST_CASE("ball sizes") {
    const auto sp = WordSpace::bounded(3, 3, 2);
    CHECK(sp.size() == 24);
    CHECK(ball_size(Word{1, 0, 0}, 1, sp) == 6);
    CHECK(ball_size(Word{2, 1, 0}, 1, sp) == 7);
    CHECK(ball_size(Word{2, 1, 0}, 0, sp) == 1);
    CHECK(ball_size(Word{2, 1, 0}, 3, sp) == 24);
    CHECK(ball_size(Word{0, 1, 2, 3}, 4, WordSpace::hamming(4, 4)) == 256);
}

TEST_CASE("exhaustive optimum examples") {
    CHECK(exhaustive_optimum(WordSpace::exact(3, 3, 3), 3).size == 3);
    CHECK(exhaustive_optimum(WordSpace::bounded(3, 3, 2), 1).size == 24);
    CHECK(exhaustive_optimum(WordSpace::exact(4, 2, 2), 4).size == 2);
    const auto res = exhaustive_optimum(WordSpace::exact(4, 3, 2), 3);
    REQUIRE(res.exact);
    const Code witness(4, 3, res.witness);
    CHECK(witness.min_distance() >= 3);
    CHECK(Count(res.witness.size()) == res.size);
}

TEST_CASE("exhaustive optimum matches naive branching") {
    for (int q = 2; q <= 3; ++q)
        for (int n = 2; n <= (q == 2 ? 6 : 4); ++n)
            for (int r = 1; r <= n; ++r)
                for (int d = 2; d <= n; ++d)
                    for (const auto& s : {WordSpace::bounded(n, q, r), WordSpace::exact(n, q, r)}) {
                        const auto words = enumerate_space(s);
                        if (words.empty() || words.size() > 24) continue;  // naive branching is exponential
                        INFO(s.describe() << " d=" << d);
                        REQUIRE(exhaustive_optimum(s, d).size == naive_max_code(words, d));
                    }
    for (const auto& c : {Composition{2, 1, 1}, Composition{2, 2, 1}, Composition{1, 1, 1, 1}}) {
        const auto s = WordSpace::of_composition(c);
        for (int d = 2; d <= c.n(); ++d) REQUIRE(exhaustive_optimum(s, d).size == naive_max_code(enumerate_space(s), d));
    }
}

TEST_CASE("node-limited search reports a valid bracket") {
    const auto full = exhaustive_optimum(WordSpace::exact(5, 3, 2), 3);
    REQUIRE(full.exact);
    const auto cut = exhaustive_optimum(WordSpace::exact(5, 3, 2), 3, {5});
    CHECK(cut.size <= full.size);
    CHECK(full.size <= cut.upper_bound);
}

TEST_CASE("u|v construction") {
    const Code c(3, 3, {{0, 1, 2}});
    const Code f(3, 3, {{0, 1, 2}});
    const auto d = uv_construct(c, f);
    CHECK(d.code.words() == std::vector<Word>{{0, 1, 2, 0, 1, 2}});
    CHECK(d.audit.symbol_weight.max == 2);

    // Constant symbol weight 2 code of length 4 over Z_3 and a 3-word FPA.
    const Code c2(4, 3, {{0, 0, 1, 2}, {1, 1, 2, 0}, {2, 2, 0, 1}, {0, 1, 1, 2}});
    const auto fpa = permutations_of(3, 3);
    const auto e = uv_construct(c2, fpa);
    CHECK(e.code.size() == 12);
    CHECK(e.code.length() == 7);
    CHECK(e.audit.symbol_weight.constant());
    CHECK(e.audit.symbol_weight.max == 3);
    CHECK(e.audit.min_distance == std::min(c2.min_distance(), fpa.min_distance()));

    CHECK_THROWS_AS(uv_construct(c2, Code(3, 3, {{0, 0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(uv_construct(Code(3, 3, {{0, 0, 1}, {0, 1, 2}}), fpa), std::invalid_argument);
}

TEST_CASE("concatenation with RS outer code") {
    // RS[4,2] over GF(5) written out by hand: a + b x at x = 1..4.
    std::vector<Word> outer;
    for (Symbol a = 0; a < 5; ++a)
        for (Symbol b = 0; b < 5; ++b) {
            Word w;
            for (Symbol x = 1; x <= 4; ++x) w.push_back((a + b * x) % 5);
            outer.push_back(w);
        }
    const Code out(4, 5, outer);
    REQUIRE(out.min_distance() == 3);
    // Five cyclic shifts of (0..4): pairwise distance 5.
    std::vector<Word> inner;
    for (Symbol s = 0; s < 5; ++s) {
        Word w;
        for (Symbol i = 0; i < 5; ++i) w.push_back((i + s) % 5);
        inner.push_back(w);
    }
    const Code in(5, 5, inner);
    const auto cat = concat_construct(out, in);
    CHECK(cat.code.size() == 25);
    CHECK(cat.code.length() == 20);
    CHECK(cat.audit.symbol_weight.min == 4);
    CHECK(cat.audit.symbol_weight.max == 4);
    CHECK(*cat.audit.min_distance >= 3 * 5);

    const auto single = concat_construct(Code(2, 5, {{3, 1}}), in);
    CHECK(single.code.size() == 1);
    CHECK(single.audit.symbol_weight.max == 2);
    CHECK_THROWS_AS(concat_construct(out, permutations_of(5, 3)), std::invalid_argument);
}

TEST_CASE("FPA multiplicity") {
    CHECK(fpa_multiplicity(permutations_of(4, 6)) == 1);
    CHECK(fpa_multiplicity(Code(4, 2, {{0, 0, 1, 1}, {1, 0, 1, 0}})) == 2);
    CHECK_FALSE(fpa_multiplicity(Code(4, 2, {{0, 0, 0, 1}})).has_value());
}
