#include <doctest.h>

#include "hodge/spaces.hpp"

using namespace hodge;

TEST_CASE("affine and projective spaces") {
    CHECK(hd_affine(0) == BiPoly(1));
    CHECK(hd_affine(1) == BiPoly::t(1));
    CHECK(hd_affine(3) == BiPoly::t(3));
    CHECK_THROWS_AS(hd_affine(-1), BadRange);

    CHECK(hd_projective(0) == BiPoly(1));
    CHECK(hd_projective(1) == BiPoly(1) + BiPoly::t(1));
    CHECK(hd_projective(2) == BiPoly(1) + BiPoly::t(1) + BiPoly::t(2));
    CHECK_THROWS_AS(hd_projective(-1), BadRange);
}

TEST_CASE("grassmannian delegates to the gaussian binomial") {
    CHECK(hd_grassmannian(0, 4) == BiPoly(1));
    CHECK(hd_grassmannian(1, 2) == hd_projective(1));
    CHECK(eval_t(hd_grassmannian(2, 4), Int(2)) == 35);
    CHECK_THROWS_AS(hd_grassmannian(3, 2), BadRange);
}

TEST_CASE("jacobian polynomial") {
    CHECK(hd_jacobian(0) == BiPoly(1));
    BiPoly g1;
    g1.add_term({0, 0}, 1);
    g1.add_term({1, 0}, 1);
    g1.add_term({0, 1}, 1);
    g1.add_term({1, 1}, 1);
    CHECK(hd_jacobian(1) == g1);
    // Total Betti number of a 2g-torus.
    CHECK(diag(hd_jacobian(2)).eval(Int(1)) == 16);
}

TEST_CASE("rank-2 odd moduli polynomial") {
    const BiPoly m = hd_m2_odd(2);
    CHECK(m.total_degree() == 10); // 2 (4g-3) at g = 2
    CHECK(m.is_symmetric_uv());
    CHECK(m.constant_term() == 1);
    CHECK(dual_transform(m, 5) == m); // smooth projective of dimension 4g-3
    CHECK_THROWS_AS(hd_m2_odd(1), BadRange);

    const BiPoly m3 = hd_m2_odd(3);
    CHECK(m3.is_symmetric_uv());
    CHECK(dual_transform(m3, 9) == m3);
}

TEST_CASE("rank-2 even moduli polynomial") {
    const BiPoly m = hd_m2_even(2);
    CHECK(m.is_symmetric_uv());
    CHECK(m.is_polynomial());
    // The even-degree stable locus is noncompact: no weight-zero class in
    // H^0_c, so the constant term vanishes. The top class survives.
    CHECK(m.constant_term() == 0);
    CHECK(m.coeff(5, 5) == 1);
    CHECK(m.total_degree() == 10);
    CHECK_THROWS_AS(hd_m2_even(1), BadRange);

    CHECK(hd_m2_even(3).is_symmetric_uv());
}

TEST_CASE("symmetric square") {
    CHECK(hd_sym2(BiPoly(1)) == BiPoly(1));
    // Sym^2 P^1 = P^2.
    CHECK(hd_sym2(hd_projective(1)) == hd_projective(2));

    // Genus-1 Jacobian: expansion fixed by hand.
    BiPoly expected;
    expected.add_term({0, 0}, 1);
    expected.add_term({1, 0}, 1);
    expected.add_term({0, 1}, 1);
    expected.add_term({1, 1}, 2);
    expected.add_term({2, 1}, 1);
    expected.add_term({1, 2}, 1);
    expected.add_term({2, 2}, 1);
    CHECK(hd_sym2(hd_jacobian(1)) == expected);
}

TEST_CASE("schubert stratum values") {
    CHECK(hd_schubert_stratum({2, 4, 2, 2}) == BiPoly(1));
    CHECK(eval_t(hd_schubert_stratum({2, 4, 2, 1}), Int(2)) == 18);
    CHECK(eval_t(hd_schubert_stratum({2, 4, 2, 0}), Int(2)) == 16);

    // (k=2, N=4, j=2, mu=1) expands to t gauss(1,2)^2 = t + 2t^2 + t^3.
    BiPoly expected;
    expected.add_term({1, 1}, 1);
    expected.add_term({2, 2}, 2);
    expected.add_term({3, 3}, 1);
    CHECK(hd_schubert_stratum({2, 4, 2, 1}) == expected);

    CHECK_THROWS_AS(hd_schubert_stratum({2, 4, 2, 3}), BadRange);
    CHECK_THROWS_AS(hd_schubert_stratum({5, 4, 2, 1}), BadRange);
}

TEST_CASE("schubert completeness and complement") {
    CHECK(hd_schubert_complement(2, 4, 2, 0).is_zero());
    CHECK(hd_schubert_complement(3, 8, 2, 3) == gauss(3, 8)); // empty sum
    CHECK(eval_t(hd_schubert_complement(2, 4, 2, 1), Int(2)) == 35 - 18 - 1);
    CHECK(eval_t(hd_schubert_complement(1, 4, 2, 1), Int(2)) == 15 - 3);
    CHECK_THROWS_AS(hd_schubert_complement(2, 4, 4, 1), BadRange); // mu_min < k+j-N

    for (int N = 0; N <= 6; ++N)
        for (int k = 0; k <= N; ++k)
            for (int j = 0; j <= N; ++j)
                CHECK(hd_schubert_complement(k, N, j, std::max(0, k + j - N)).is_zero());
}

TEST_CASE("every builder output is u<->v symmetric") {
    CHECK(hd_projective(4).is_symmetric_uv());
    CHECK(hd_grassmannian(2, 5).is_symmetric_uv());
    CHECK(hd_jacobian(3).is_symmetric_uv());
    CHECK(hd_m2_odd(2).is_symmetric_uv());
    CHECK(hd_m2_even(2).is_symmetric_uv());
    CHECK(hd_sym2(hd_jacobian(2)).is_symmetric_uv());
    CHECK(hd_schubert_stratum({2, 5, 3, 1}).is_symmetric_uv());
}

TEST_CASE("poincare duality transforms") {
    CHECK(hp_from_hd_smooth(BiPoly::t(4), 4) == BiPoly(1));
    CHECK(hp_from_hd_smooth(gauss(2, 4), 4) == gauss(2, 4));
    const BiPoly p = hd_m2_odd(2);
    CHECK(hd_from_hp_smooth(hp_from_hd_smooth(p, 5), 5) == p);
    // Wrong dimension leaves the polynomial ring.
    CHECK_THROWS_AS(hp_from_hd_smooth(gauss(2, 4), 3), NonPolynomialResult);
}
