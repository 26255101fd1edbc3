#include <doctest.h>

#include "hodge/bipoly.hpp"
#include "test_util.hpp"

using namespace hodge;

namespace {

BiPoly one_plus_t() { return BiPoly(1) + BiPoly::t(1); }

} // namespace

TEST_CASE("addition cancels and respects identities") {
    const BiPoly p = BiPoly(1) + BiPoly::t(1);
    CHECK(p + BiPoly(-1) == BiPoly::t(1));
    CHECK(p + BiPoly() == p);

    const BiPoly q = (BiPoly(1) + BiPoly::u()) * (BiPoly(1) + BiPoly::v());
    CHECK(q + q == Int(2) * q);
}

TEST_CASE("multiplication expands exactly") {
    const BiPoly one(1);
    BiPoly expected;
    expected.add_term({0, 0}, 1);
    expected.add_term({1, 0}, 1);
    expected.add_term({0, 1}, 1);
    expected.add_term({1, 1}, 1);
    CHECK((one + BiPoly::u()) * (one + BiPoly::v()) == expected);

    CHECK((one - BiPoly::t(1)) * (one + BiPoly::t(1)) == one - BiPoly::t(2));

    // gauss(1,2)^2 = 1 + 2uv + (uv)^2
    BiPoly sq;
    sq.add_term({0, 0}, 1);
    sq.add_term({1, 1}, 2);
    sq.add_term({2, 2}, 1);
    CHECK(gauss(1, 2) * gauss(1, 2) == sq);
}

TEST_CASE("div_exact handles the geometric cases") {
    const BiPoly one(1);
    CHECK(div_exact(one - BiPoly::t(2), one - BiPoly::t(1)) == one_plus_t());
    CHECK(div_exact(one - BiPoly::t(3), one - BiPoly::t(1)) == geometric_sum_t(3));

    CHECK_THROWS_AS(div_exact(one + BiPoly::u(), one - BiPoly::t(1)), NotDivisible);
    CHECK_THROWS_AS(div_exact(one, BiPoly()), DivisionByZero);

    // The remainder is reported for diagnosis.
    try {
        div_exact(one + BiPoly::u(), one - BiPoly::t(1));
        CHECK(false);
    } catch (const NotDivisible& e) {
        CHECK(!e.remainder.is_zero());
    }
}

TEST_CASE("div_exact handles Laurent operands") {
    const BiPoly one(1);
    const BiPoly shifted = BiPoly::monomial(1, -1, -2) * (one + BiPoly::u());
    CHECK(div_exact(shifted, one + BiPoly::u()) == BiPoly::monomial(1, -1, -2));
    CHECK(div_exact(one, BiPoly::monomial(1, -2, -2)) == BiPoly::t(2));
    // Monomial content of the divisor factors out.
    CHECK(div_exact(gauss(1, 3), BiPoly::monomial(1, 1, 1) * gauss(1, 3)) ==
          BiPoly::monomial(1, -1, -1));
}

TEST_CASE("div_exact inverts multiplication on random inputs") {
    testutil::Lcg rng;
    int tried = 0;
    while (tried < 60) {
        const BiPoly a = testutil::random_poly(rng, 6, 4, 9);
        const BiPoly b = testutil::random_poly(rng, 6, 4, 9);
        if (b.is_zero()) continue;
        ++tried;
        CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("scalar division tracks parity") {
    const BiPoly even = Int(2) * gauss(2, 4);
    CHECK(half_exact(even) == gauss(2, 4));
    CHECK_THROWS_AS(half_exact(gauss(1, 2)), OddCoefficient);
    CHECK_THROWS_AS(div_scalar_exact(gauss(1, 2), Int(0)), DivisionByZero);
    CHECK(div_scalar_exact(Int(6) * gauss(1, 3), Int(3)) == Int(2) * gauss(1, 3));
}

TEST_CASE("diag substitutes u = v = t") {
    const BiPoly jac1 = (BiPoly(1) + BiPoly::u()) * (BiPoly(1) + BiPoly::v());
    UniPoly expected;
    expected.add_term(0, 1);
    expected.add_term(1, 2);
    expected.add_term(2, 1);
    CHECK(diag(jac1) == expected);
    CHECK(diag(BiPoly::t(1)) == UniPoly::monomial(1, 2));
    CHECK(diag(jac1.pow(2)) == diag(jac1) * diag(jac1));

    CHECK_THROWS_AS(diag(BiPoly::monomial(1, -1, 0)), LaurentInput);
}

TEST_CASE("diag is multiplicative on random inputs") {
    testutil::Lcg rng;
    for (int i = 0; i < 40; ++i) {
        const BiPoly a = testutil::random_poly(rng, 5, 4, 6);
        const BiPoly b = testutil::random_poly(rng, 5, 4, 6);
        CHECK(diag(a * b) == diag(a) * diag(b));
    }
}

TEST_CASE("twist_sym substitutes u -> -u^2, v -> -v^2") {
    const BiPoly one(1);
    CHECK(twist_sym(one + BiPoly::t(1)) == one + BiPoly::t(2));
    CHECK(twist_sym(BiPoly::u() + BiPoly::v()) ==
          -(BiPoly::u(2) + BiPoly::v(2)));
    CHECK(twist_sym((one + BiPoly::u()) * (one + BiPoly::v())) ==
          (one - BiPoly::u(2)) * (one - BiPoly::v(2)));
}

TEST_CASE("twist_sym twice scales exponents by 4 with the parity sign") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const BiPoly m = BiPoly::monomial(1, a, b);
            const BiPoly twice = twist_sym(twist_sym(m));
            const Int sign = ((a + b) % 2 == 0) ? Int(1) : Int(-1);
            CHECK(twice == BiPoly::monomial(sign, 4 * a, 4 * b));
        }
    }
}

TEST_CASE("dual_transform") {
    CHECK(dual_transform(one_plus_t(), 1) == one_plus_t());
    CHECK(dual_transform(BiPoly(1), 3) == BiPoly::t(3));
    CHECK(dual_transform(gauss(2, 4), 4) == gauss(2, 4));
    // Round trip through Laurent territory.
    const BiPoly p = gauss(2, 5);
    CHECK(dual_transform(dual_transform(p, 7), 7) == p);
}

TEST_CASE("gauss basics and symmetry") {
    CHECK(gauss(0, 5) == BiPoly(1));
    CHECK(gauss(1, 2) == one_plus_t());
    CHECK(eval_t(gauss(2, 4), Int(2)) == 35);
    CHECK_THROWS_AS(gauss(-1, 3), BadRange);
    CHECK_THROWS_AS(gauss(4, 3), BadRange);

    for (int N = 0; N <= 10; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(gauss(k, N) == gauss(N - k, N));
            CHECK(dual_transform(gauss(k, N), k * (N - k)) == gauss(k, N));
        }
    }
}

TEST_CASE("eval_t") {
    CHECK(eval_t(one_plus_t(), Int(3)) == 4);
    CHECK(eval_t(BiPoly(), Int(5)) == 0);
    CHECK_THROWS_AS(eval_t(BiPoly(1) + BiPoly::u(), Int(2)), NotPureT);
}

TEST_CASE("assert_polynomial gates Laurent values") {
    CHECK_NOTHROW(assert_polynomial(gauss(1, 3), "test"));
    CHECK_THROWS_AS(assert_polynomial(BiPoly::monomial(1, -2, 0), "test"),
                    NonPolynomialResult);
}

TEST_CASE("degrees, symmetry predicate, canonical form") {
    const BiPoly p = gauss(2, 4);
    CHECK(p.total_degree() == 8);
    CHECK(p.degree_u() == 4);
    CHECK(p.is_pure_t());
    CHECK(p.is_symmetric_uv());
    CHECK(!(BiPoly(1) + BiPoly::u()).is_symmetric_uv());

    BiPoly q;
    q.add_term({1, 1}, 5);
    q.add_term({1, 1}, -5);
    CHECK(q.is_zero());
    CHECK(q == BiPoly());
}

TEST_CASE("unipoly eval agrees with naive powering") {
    UniPoly p;
    p.add_term(0, 3);
    p.add_term(2, -1);
    p.add_term(5, 2);
    const Int x(7);
    Int naive = 3 - 1 * 49;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), 5);
    naive += 2 * pw;
    CHECK(p.eval(x) == naive);
    CHECK(UniPoly().eval(Int(10)) == 0);
}
