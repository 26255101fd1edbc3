#include <doctest.h>

#include "hodge/counts.hpp"

using namespace hodge;

namespace {

JHType make_type(std::initializer_list<std::pair<int, int>> parts) {
    JHType t;
    for (const auto& [r, d] : parts) t.parts.push_back({r, d});
    return t;
}

} // namespace

TEST_CASE("admissible type enumeration") {
    const auto t22 = admissible_types(2, 2, 2);
    REQUIRE(t22.size() == 1);
    CHECK(t22[0] == make_type({{1, 1}, {1, 1}}));

    CHECK(admissible_types(2, 1, 2).empty()); // d_i = 1/2 non-integral

    const auto t42 = admissible_types(4, 2, 2);
    REQUIRE(t42.size() == 1);
    CHECK(t42[0] == make_type({{2, 1}, {2, 1}}));

    // Ordered compositions: (1,3), (2,2), (3,1).
    const auto t44 = admissible_types(4, 4, 2);
    REQUIRE(t44.size() == 3);
    CHECK(t44[0] == make_type({{1, 1}, {3, 3}}));
    CHECK(t44[1] == make_type({{2, 2}, {2, 2}}));
    CHECK(t44[2] == make_type({{3, 3}, {1, 1}}));

    CHECK(admissible_types(3, 3, 4).empty()); // more parts than rank
    CHECK_THROWS_AS(admissible_types(0, 1, 1), PreconditionError);
}

TEST_CASE("type validation") {
    CHECK_NOTHROW(make_type({{1, 1}, {1, 1}}).validate(2, 2));
    CHECK_THROWS_AS(make_type({{1, 1}, {1, 0}}).validate(2, 2), SlopeMismatch);
    CHECK_THROWS_AS(make_type({{1, 1}}).validate(2, 2), PreconditionError); // wrong sums
    CHECK_THROWS_AS(JHType{}.validate(2, 2), PreconditionError);
}

TEST_CASE("subextension triples and the codimension bound") {
    // (4, 2, 2, 2): the only admissible triple is (n', d', k') = (2, 1, 1).
    const auto triples = subextension_triples({4, 2, 2, 2});
    REQUIRE(triples.size() == 1);
    CHECK(triples[0].nprime == 2);
    CHECK(triples[0].dprime == 1);
    CHECK(triples[0].kprime == 1);
    CHECK(codim_S_bound({4, 2, 2, 2}) == 1);

    // Coprime rank/degree leaves no subextension: the bound is infinite.
    CHECK(!codim_S_bound({3, 1, 1, 2}).has_value());

    CHECK_THROWS_AS(codim_S_bound({3, 1, 2, 2}), PreconditionError); // n-k < 2
}

TEST_CASE("codim_S_bound is never negative") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (int d = 1; d <= 8; ++d)
                for (int g = 2; g <= 3; ++g) {
                    const auto bound = codim_S_bound({n, d, k, g});
                    if (bound) CHECK(*bound >= 0);
                }
}

TEST_CASE("improved codimension bound") {
    CHECK(codim_W_bound({4, 2, 2, 2}) == 1);  // n-k = 2, p = 2, g = 2
    CHECK(codim_W_bound({6, 2, 2, 2}) == 4);  // n-k = 4, p = 2
    CHECK(codim_W_bound({6, 4, 2, 2}) == 3);  // p = 4: 3 * 16/16
    CHECK_THROWS_AS(codim_W_bound({3, 1, 1, 2}), NotApplicable); // p = 1

    // The closed value matches exhaustive enumeration over admissible types.
    for (int nk = 2; nk <= 8; ++nk)
        for (int p = 2; p <= nk; ++p) {
            if (nk % p != 0) continue;
            for (int g = 2; g <= 3; ++g) {
                const ModuliParams params{nk + 1, p, 1, g};
                const long long m = nk / p;
                CHECK(codim_W_bound(params) == (p - 1) * m * m * (g - 1));
                CHECK(codim_W_admissible_min(nk, p, g) == (p - 1) * m * m * (g - 1));
            }
        }
}

TEST_CASE("r = 2 parameter counts") {
    CHECK(param_count_r2(2, 1, 2, R2Variant::E) == 4);
    CHECK(param_count_r2(2, 1, 2, R2Variant::EPrime) == 3);
    CHECK(param_count_r2(2, 1, 2, R2Variant::SE) == 4);
    CHECK(param_count_r2(2, 1, 2, R2Variant::SEPrime) == 2);

    CHECK_THROWS_AS(param_count_r2(3, 1, 2, R2Variant::EPrime), BadVariant);
    CHECK_THROWS_AS(param_count_r2(3, 1, 2, R2Variant::SEPrime), BadVariant);
    CHECK_THROWS_AS(param_count_r2(2, 2, 2, R2Variant::E), PreconditionError);
}

TEST_CASE("general parameter count") {
    // r = 1: no correction terms.
    CHECK(param_count_general(2, 2, 2, make_type({{2, 2}})) == 5);
    CHECK(param_count_general(2, 2, 2, make_type({{1, 1}, {1, 1}})) == 4);
    CHECK(param_count_general(3, 3, 2, make_type({{1, 1}, {1, 1}, {1, 1}})) == 7);
}

TEST_CASE("r = 3 parameter counts") {
    const JHType t111 = make_type({{1, 1}, {1, 1}, {1, 1}});
    CHECK(param_count_r3(3, 3, 2, t111, R3Set::S11) == 7);
    CHECK(param_count_r3(3, 3, 2, t111, R3Set::S31) == 7);
    CHECK(param_count_r3(3, 3, 2, t111, R3Set::S12_12) == 4);

    const JHType t112 = make_type({{1, 1}, {1, 1}, {2, 2}});
    CHECK_NOTHROW(param_count_r3(4, 4, 2, t112, R3Set::S12_12));
    const JHType t121 = make_type({{1, 1}, {2, 2}, {1, 1}});
    CHECK_THROWS_AS(param_count_r3(4, 4, 2, t121, R3Set::S12_12), BadVariant);
    CHECK_THROWS_AS(param_count_r3(2, 2, 2, make_type({{1, 1}, {1, 1}}), R3Set::S11),
                    BadVariant);
}

TEST_CASE("parameter-count specializations agree") {
    for (int g = 2; g <= 3; ++g) {
        // r = 2 agreement with the E variant, ranks summing to <= 6.
        for (int n1 = 1; n1 <= 5; ++n1)
            for (int n2 = 1; n1 + n2 <= 6; ++n2) {
                const int nk = n1 + n2;
                const JHType type = make_type({{n1, n1}, {n2, n2}});
                CHECK(param_count_general(nk, nk, g, type) ==
                      param_count_r2(nk, n1, g, R2Variant::E));
            }
        // r = 3: the S11 set carries exactly the general count.
        for (int n1 = 1; n1 <= 4; ++n1)
            for (int n2 = 1; n1 + n2 <= 5; ++n2)
                for (int n3 = 1; n1 + n2 + n3 <= 6; ++n3) {
                    const int nk = n1 + n2 + n3;
                    const JHType type = make_type({{n1, n1}, {n2, n2}, {n3, n3}});
                    CHECK(param_count_general(nk, nk, g, type) ==
                          param_count_r3(nk, nk, g, type, R3Set::S11));
                }
    }
}
