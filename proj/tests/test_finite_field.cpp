#include "catch_amalgamated.hpp"
#include "support.hpp"

#include <set>

using namespace symwt;
using namespace testsupport;

namespace {

Element rnd(const Field& F) { return F.element(static_cast<std::uint32_t>(uniform(0, F.size() - 1))); }

Polynomial poly(const Field& F, std::initializer_list<int> c) {
    std::vector<Element> v;
    for (const int x : c) v.push_back(F.from_int(x));
    return Polynomial(std::move(v));
}

// Irreducibility by checking every monic factor of degree <= t/2 with poly_mod.
bool brute_irreducible(const Field& F, const Polynomial& f) {
    const int t = f.degree();
    if (t < 1) return false;
    for (int s = 1; 2 * s <= t; ++s)
        for (std::uint64_t i = 0; i < monic_count(F, s); ++i)
            if (poly_mod(F, f, monic_polynomial(F, s, i)).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("field axioms on random triples") {
    for (const int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32}) {
        const Field F = Field::of_order(q);
        REQUIRE(F.size() == q);
        for (int it = 0; it < 400; ++it) {
            const auto a = rnd(F), b = rnd(F), c = rnd(F);
            REQUIRE(F.add(a, F.zero()) == a);
            REQUIRE(F.mul(a, F.one()) == a);
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.add(a, F.neg(a)) == F.zero());
            REQUIRE(F.sub(F.add(a, b), b) == a);
            if (a != F.zero()) {
                REQUIRE(F.mul(a, F.inv(a)) == F.one());
                REQUIRE(F.mul(F.div(b, a), a) == b);
                REQUIRE(F.pow(a, static_cast<std::uint64_t>(q - 1)) == F.one());
            }
        }
        REQUIRE(F.nonzero_elements().size() == static_cast<std::size_t>(q - 1));
    }
}

TEST_CASE("field basics") {
    const Field F7 = Field::of_order(7);
    CHECK(F7.mul(F7.from_int(3), F7.from_int(5)) == F7.one());
    CHECK(F7.from_int(-1) == F7.from_int(6));
    CHECK_THROWS_AS(F7.inv(F7.zero()), std::domain_error);
    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(128), CapExceeded);
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);

    const Field F4 = Field::of_order(4);
    CHECK(F4.characteristic() == 2);
    CHECK(F4.degree() == 2);
    // The lowest irreducible quadratic over GF(2) is x^2 + x + 1.
    CHECK(F4.modulus() == std::vector<int>{1, 1, 1});
    // Multiplicative group of GF(16) is cyclic of order 15: some element has order 15.
    const Field F16 = Field::of_order(16);
    bool generator = false;
    for (const auto a : F16.nonzero_elements()) {
        int ord = 1;
        for (auto x = a; x != F16.one(); x = F16.mul(x, a)) ++ord;
        generator = generator || ord == 15;
    }
    CHECK(generator);
}

TEST_CASE("polynomial arithmetic") {
    const Field F = Field::of_order(7);
    const auto f = poly(F, {2, 0, 0, 1});  // x^3 + 2
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    CHECK(Polynomial().degree() == -1);

    for (int it = 0; it < 300; ++it) {
        std::vector<Element> ca, cb;
        for (int i = uniform(0, 6); i >= 0; --i) ca.push_back(rnd(F));
        for (int i = uniform(0, 4); i >= 0; --i) cb.push_back(rnd(F));
        const Polynomial a(ca), b(cb);
        if (b.is_zero()) continue;
        const auto [quo, rem] = poly_divmod(F, a, b);
        REQUIRE(poly_add(F, poly_mul(F, quo, b), rem) == a);
        REQUIRE(rem.degree() < b.degree());
        const auto x = rnd(F);
        REQUIRE(poly_eval(F, poly_mul(F, a, b), x) == F.mul(poly_eval(F, a, x), poly_eval(F, b, x)));
        const auto g = poly_gcd(F, a, b);
        if (!g.is_zero()) {
            REQUIRE(poly_mod(F, a, g).is_zero());
            REQUIRE(poly_mod(F, b, g).is_zero());
        }
    }
}

TEST_CASE("evaluation words") {
    const Field F5 = Field::of_order(5);
    CHECK(poly_eval_all(Polynomial::x(), F5) == std::vector<std::uint32_t>{1, 2, 3, 4});
    CHECK(poly_eval_all(Polynomial::constant(F5.from_int(3)), F5) == std::vector<std::uint32_t>{3, 3, 3, 3});
    const Field F7 = Field::of_order(7);
    // x^3 + 2 at 1..6: cubes are 1,1,6,1,6,6.
    CHECK(poly_eval_all(poly(F7, {2, 0, 0, 1}), F7) == std::vector<std::uint32_t>{3, 3, 1, 3, 1, 1});
}

TEST_CASE("Mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
}

TEST_CASE("irreducible counts") {
    CHECK(count_monic_irreducibles(2, 2) == 1);
    CHECK(count_monic_irreducibles(7, 1) == 7);
    CHECK(count_monic_irreducibles(7, 3) == 112);
    for (const int q : {2, 3, 4, 5, 7, 8, 9}) {
        const Field F = Field::of_order(q);
        for (int t = 1; t <= 4 && monic_count(F, t) <= 20000; ++t) {
            std::uint64_t irr = 0, irr_brute = 0, root_free = 0;
            for (std::uint64_t i = 0; i < monic_count(F, t); ++i) {
                const auto f = monic_polynomial(F, t, i);
                const bool ben_or = is_irreducible(F, f);
                REQUIRE(ben_or == is_irreducible_trial_division(F, f));
                irr_brute += brute_irreducible(F, f);
                irr += ben_or;
                bool root = false;
                for (int x = 0; x < q; ++x) root = root || poly_eval(F, f, F.element(static_cast<std::uint32_t>(x))) == F.zero();
                REQUIRE(root == has_root(F, f));
                root_free += !root;
            }
            INFO("q=" << q << " t=" << t);
            REQUIRE(Count(irr) == count_monic_irreducibles(q, t));
            REQUIRE(irr_brute == irr);
            REQUIRE(Count(root_free) == count_root_free_monic(q, t));
        }
    }
}

TEST_CASE("enumerating irreducibles") {
    const Field F2 = Field::of_order(2);
    std::vector<Polynomial> got;
    enumerate_monic_irreducibles(F2, 2, [&](const Polynomial& f) { got.push_back(f); });
    REQUIRE(got.size() == 1);
    CHECK(got[0] == poly(F2, {1, 1, 1}));

    const Field F7 = Field::of_order(7);
    std::size_t lin = 0;
    enumerate_monic_irreducibles(F7, 1, [&](const Polynomial&) { ++lin; });
    CHECK(lin == 7);
    std::vector<Polynomial> cubics;
    enumerate_monic_irreducibles(F7, 3, [&](const Polynomial& f) { cubics.push_back(f); });
    CHECK(cubics.size() == 112);
    CHECK(std::find(cubics.begin(), cubics.end(), poly(F7, {2, 0, 0, 1})) != cubics.end());
}

TEST_CASE("root-free products") {
    const Field F7 = Field::of_order(7);
    std::vector<Polynomial> d0, d1, d3;
    products_of_irreducibles_min_deg2(F7, 0, [&](const Polynomial& f) { d0.push_back(f); });
    products_of_irreducibles_min_deg2(F7, 1, [&](const Polynomial& f) { d1.push_back(f); });
    products_of_irreducibles_min_deg2(F7, 3, [&](const Polynomial& f) { d3.push_back(f); });
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == Polynomial::constant(F7.one()));
    CHECK(d1.empty());
    CHECK(d3.size() == 112);
    for (const auto& f : d3) CHECK(is_irreducible(F7, f));

    // Degree 4 over GF(3): irreducible quartics plus products of two quadratics.
    const Field F3 = Field::of_order(3);
    std::set<std::vector<std::uint32_t>> quartics;
    products_of_irreducibles_min_deg2(F3, 4, [&](const Polynomial& f) {
        std::vector<std::uint32_t> c;
        for (const auto e : f.coefficients()) c.push_back(e.value);
        quartics.insert(c);
    });
    std::vector<Polynomial> quad;
    enumerate_monic_irreducibles(F3, 2, [&](const Polynomial& f) { quad.push_back(f); });
    std::set<std::vector<std::uint32_t>> expected;
    enumerate_monic_irreducibles(F3, 4, [&](const Polynomial& f) {
        std::vector<std::uint32_t> c;
        for (const auto e : f.coefficients()) c.push_back(e.value);
        expected.insert(c);
    });
    for (std::size_t i = 0; i < quad.size(); ++i)
        for (std::size_t j = i; j < quad.size(); ++j) {
            const auto prod = poly_mul(F3, quad[i], quad[j]);
            std::vector<std::uint32_t> c;
            for (const auto e : prod.coefficients()) c.push_back(e.value);
            expected.insert(c);
        }
    CHECK(quartics == expected);
}
