#include <doctest.h>

#include "hodge/render.hpp"
#include "hodge/spaces.hpp"
#include "test_util.hpp"

using namespace hodge;

TEST_CASE("latex rendering is whitespace-free and exact") {
    CHECK(to_latex(gauss(1, 2)) == "1+uv");
    CHECK(to_latex(hd_jacobian(1)) == "1+u+v+uv");
    CHECK(to_latex(gauss(2, 4)) == "1+uv+2u^{2}v^{2}+u^{3}v^{3}+u^{4}v^{4}");
    CHECK(to_latex(BiPoly(1) - BiPoly::t(1)) == "1-uv");
}

TEST_CASE("plain rendering") {
    CHECK(to_plain(BiPoly()) == "0");
    CHECK(to_plain(gauss(1, 2)) == "1 + u v");
    CHECK(to_plain(BiPoly(-3) + BiPoly::monomial(2, 2, 1)) == "-3 + 2 u^2 v");
}

TEST_CASE("json layout is canonical and sorted") {
    const std::string expected =
        R"({"terms":[{"eu":0,"ev":0,"c":"1"},{"eu":1,"ev":1,"c":"1"}]})";
    CHECK(to_json(gauss(1, 2)).dump() == expected);
}

TEST_CASE("json round trip on random polynomials") {
    testutil::Lcg rng;
    for (int i = 0; i < 50; ++i) {
        BiPoly p = testutil::random_poly(rng, 8, 5, 99);
        // Push some terms into Laurent territory too.
        p.add_term({-rng.range(0, 3), rng.range(0, 3)}, Int(rng.range(-5, 5)));
        const auto text = to_json(p).dump();
        CHECK(bipoly_from_json(nlohmann::json::parse(text)) == p);
    }
}

TEST_CASE("json parsing rejects malformed input") {
    CHECK_THROWS_AS(bipoly_from_json(nlohmann::json::parse("{}")), PreconditionError);
    CHECK_THROWS_AS(
        bipoly_from_json(nlohmann::json::parse(R"({"terms":[{"eu":0}]})")),
        PreconditionError);
    CHECK_THROWS_AS(
        bipoly_from_json(nlohmann::json::parse(R"({"terms":[{"eu":0,"ev":0,"c":"x"}]})")),
        PreconditionError);
}

TEST_CASE("unipoly json round trip") {
    UniPoly p;
    p.add_term(0, 1);
    p.add_term(3, -7);
    CHECK(unipoly_from_json(to_json(p)) == p);
}

TEST_CASE("check report json round trip") {
    CheckReport r;
    r.name = "demo";
    r.diff.push_back({1, 2, Int(3), Int(-4)});
    r.passed = false;
    r.failures.push_back("something");
    const CheckReport back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    CHECK(back.name == r.name);
    CHECK(back.passed == r.passed);
    CHECK(back.diff == r.diff);
    CHECK(back.failures == r.failures);
}

TEST_CASE("format names") {
    CHECK(parse_format("plain") == OutputFormat::Plain);
    CHECK(parse_format("latex") == OutputFormat::Latex);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("yaml"), PreconditionError);
}
