#include "catch_amalgamated.hpp"
#include "support.hpp"

#include <sstream>

using namespace symwt;
using namespace testsupport;

TEST_CASE("code files round trip") {
    for (int it = 0; it < 50; ++it) {
        const int n = uniform(1, 9), q = uniform(2, 6);
        std::set<Word> ws;
        for (int i = uniform(1, 20); i > 0; --i) ws.insert(random_word(n, q));
        const Code c(n, q, {ws.begin(), ws.end()});
        std::stringstream s;
        const std::optional<int> d = uniform(0, 1) ? std::optional<int>(uniform(1, n)) : std::nullopt;
        const std::optional<int> r = uniform(0, 1) ? std::optional<int>(uniform(1, n)) : std::nullopt;
        write_code(s, c, d, r);
        const auto back = read_code(s);
        REQUIRE(back.code.words() == c.words());
        REQUIRE(back.code.alphabet() == q);
        REQUIRE(back.d == d);
        REQUIRE(back.r == r);

        const auto j = to_json(c);
        REQUIRE(j["schema"] == 1);
        REQUIRE(code_from_json(Json::parse(j.dump())).words() == c.words());
    }
}

TEST_CASE("malformed code files") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_code(in);
    };
    CHECK_THROWS_AS(parse(""), std::invalid_argument);
    CHECK_THROWS_AS(parse("\n  \n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3 x\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3\n0 1 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3\n0 a 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("3 3\n0 1 2\n0 1 2\n"), std::invalid_argument);
    const auto ok = parse("3 3 2 1\n0 1 2\n\n1 2 0\n");
    CHECK(ok.code.size() == 2);
    CHECK(ok.d == 2);
    CHECK(ok.r == 1);
}

TEST_CASE("JSON views") {
    CHECK(to_json(Composition{3, 0, 1}).dump() == "[3,0,1]");
    CHECK(composition_from_json(Json("1^4 5^4")) == parse_exponential("1^4 5^4"));
    CHECK(composition_from_json(Json::parse("[2,1]")) == Composition{2, 1});

    const Field F = Field::of_order(9);
    const auto jf = to_json(F);
    CHECK(jf["p"] == 3);
    CHECK(jf["m"] == 2);
    const Polynomial g({F.element(2), F.element(0), F.element(1)});
    CHECK(polynomial_from_json(to_json(g), F) == g);

    const auto fam = search_anticode(6, 3, 3, 4, SearchStrategy::greedy);
    const auto jfam = to_json(fam);
    CHECK(jfam["kind"] == "anticode");
    CHECK(jfam["members"].size() == fam.size());

    const auto b = singleton_upper(6, 4, 7);
    const auto jb = to_json(b);
    CHECK(jb["value"] == "343");
    CHECK(jb["direction"] == "upper");
    CHECK(jb["provenance"] == "singleton");

    const auto rate = lp_rate_upper(0.5, 16);
    CHECK(to_json(rate).contains("rate"));

    const auto row = size_row({3, 3, 2, WeightMode::bounded});
    CHECK(to_json(row)["size"] == "24");
}

TEST_CASE("CSV rows") {
    CHECK(to_csv(size_row({3, 3, 2, WeightMode::bounded})).rfind("3,3,2,bounded,24,", 0) == 0);
    CHECK(to_csv(singleton_upper(6, 4, 7)).rfind("singleton,upper,size,343,false,6,7,4,", 0) == 0);
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"x\"") == "\"say \"\"x\"\"\"");
    const auto t = rate_curves(4, 0.5, std::nullopt, 2);
    const auto csv = to_csv(t);
    CHECK(csv.rfind("rho,delta,gv_exact,gv_bounded,gv_exact_growing_q,lp,large_weight,large_weight_growing_q,singleton\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("conjecture report JSON") {
    const Field F7 = Field::of_order(7);
    ConjectureOptions opt;
    opt.only_g = Polynomial({F7.from_int(2), F7.zero(), F7.zero(), F7.one()});
    const auto j = to_json(conjecture_check(F7, 5, 1, opt));
    CHECK(j["failures"] == 1);
    CHECK(j["records"][0]["status"] == "failure");
    CHECK(j["records"][0]["g"].dump() == "[2,0,0,1]");
}
