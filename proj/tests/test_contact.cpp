#include <algorithm>
#include <vector>

#include "doctest.h"

#include "contact_atlas/contact.hpp"

using namespace contact_atlas;

namespace {

RationalMatrix diag(std::initializer_list<long long> entries) {
    RationalMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    int i = 0;
    for (long long x : entries) {
        m.at(i, i) = Rat(x);
        ++i;
    }
    return m;
}

// Order-4 rotation acting on each symplectic pair (x_j, x_{j+n+1}).
RationalMatrix pair_rotation(int n) {
    int half = n + 1;
    RationalMatrix m(2 * half, 2 * half);
    for (int j = 0; j < half; ++j) {
        m.at(j, half + j) = -1;
        m.at(half + j, j) = 1;
    }
    return m;
}

}  // namespace

TEST_SUITE("contact") {

TEST_CASE("omega transformation classes") {
    SymplecticAmbient amb = make_ambient(1);
    CHECK(amb.dim() == 4);

    CHECK(omega_transform(RationalMatrix::identity(4), amb).kind == OmegaClass::Preserves);
    CHECK(theta_invariant(RationalMatrix::identity(4), amb));

    OmegaTransform neg = omega_transform(diag({1, 1, -1, -1}), amb);
    CHECK(neg.kind == OmegaClass::Negates);
    CHECK(omega_class_name(neg) == "negates omega");
    CHECK_FALSE(theta_invariant(diag({1, 1, -1, -1}), amb));

    OmegaTransform scaled = omega_transform(diag({2, 2, 2, 2}), amb);
    CHECK(scaled.kind == OmegaClass::Other);
    CHECK(scaled.scale == 4);

    CHECK(omega_transform(diag({1, 2, 1, 1}), amb).kind == OmegaClass::NonScalar);
    CHECK(omega_transform(pair_rotation(1), amb).kind == OmegaClass::Preserves);

    SUBCASE("rejects singular and mis-sized input") {
        RationalMatrix singular(4, 4);
        CHECK_THROWS_AS(omega_transform(singular, amb), std::invalid_argument);
        CHECK_THROWS_AS(omega_transform(RationalMatrix::identity(3), amb),
                        std::invalid_argument);
    }
}

TEST_CASE("group closure") {
    LinearContactAction a1 = make_action(1, {diag({1, -1, 1, -1})});
    CHECK(a1.elements.size() == 2);

    LinearContactAction a2 =
        make_action(2, {diag({1, -1, 1, 1, -1, 1}), diag({1, 1, -1, 1, 1, -1})});
    CHECK(a2.elements.size() == 4);

    LinearContactAction a4 = make_action(1, {pair_rotation(1)});
    CHECK(a4.elements.size() == 4);

    SUBCASE("identity comes first") {
        CHECK(a2.elements[0] == RationalMatrix::identity(6));
    }
    SUBCASE("cap aborts runaway closures") {
        CHECK_THROWS_AS(make_action(1, {pair_rotation(1)}, 3), std::invalid_argument);
    }
}

TEST_CASE("matrix order") {
    CHECK(matrix_order(RationalMatrix::identity(4)) == 1);
    CHECK(matrix_order(diag({1, -1, 1, -1})) == 2);
    CHECK(matrix_order(pair_rotation(1)) == 4);
    CHECK_THROWS_AS(matrix_order(diag({2, 1, 1, 1}), 50), std::invalid_argument);
}

TEST_CASE("roots of unity") {
    CHECK(make_root(6, 2).order == 3);
    CHECK(make_root(6, 2).power == 1);
    CHECK(root_mul(make_root(4, 1), make_root(4, 3)) == make_root(1, 0));
    CHECK(root_inverse(make_root(3, 1)) == make_root(3, 2));
    CHECK(root_to_string(make_root(1, 0)) == "1");
    CHECK(root_to_string(make_root(2, 1)) == "-1");
    CHECK(root_to_string(make_root(4, 1)) == "i");
    CHECK(root_to_string(make_root(3, 2)) == "zeta3^2");
}

TEST_CASE("fixed components of diagonalizable elements") {
    auto recs = fixed_components(diag({1, 1, -1, -1}), 7);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].group_element == 7);
    CHECK(recs[0].eigenvalue == make_root(1, 0));
    CHECK(recs[0].projective_dimension == 1);
    CHECK(recs[0].codimension == 2);
    CHECK(recs[1].eigenvalue == make_root(2, 1));
    CHECK(recs[1].projective_dimension == 1);
    CHECK(recs[1].codimension == 2);
}

TEST_CASE("fixed components over quadratic cyclotomic fields") {
    SUBCASE("order four rotation has two conjugate planes") {
        auto recs = fixed_components(pair_rotation(1));
        REQUIRE(recs.size() == 2);
        CHECK(recs[0].eigenvalue == make_root(4, 1));
        CHECK(recs[0].projective_dimension == 1);
        CHECK(recs[1].eigenvalue == make_root(4, 3));
        CHECK(recs[1].projective_dimension == 1);
    }
    SUBCASE("order three block plus a fixed plane") {
        RationalMatrix g(4, 4);
        g.at(0, 1) = -1;
        g.at(1, 0) = 1;
        g.at(1, 1) = -1;
        g.at(2, 2) = 1;
        g.at(3, 3) = 1;
        CHECK(matrix_order(g) == 3);
        auto recs = fixed_components(g);
        REQUIRE(recs.size() == 3);
        CHECK(recs[0].eigenvalue == make_root(1, 0));
        CHECK(recs[0].projective_dimension == 1);
        CHECK(recs[0].codimension == 2);
        CHECK(recs[1].eigenvalue == make_root(3, 1));
        CHECK(recs[1].projective_dimension == 0);
        CHECK(recs[1].codimension == 3);
        CHECK(recs[2].eigenvalue == make_root(3, 2));
        CHECK(recs[2].projective_dimension == 0);
    }
    SUBCASE("unsupported orders are rejected") {
        // Companion matrix of 1 + x + x^2 + x^3 + x^4, of order 5.
        RationalMatrix g(4, 4);
        g.at(0, 3) = -1;
        g.at(1, 0) = 1;
        g.at(1, 3) = -1;
        g.at(2, 1) = 1;
        g.at(2, 3) = -1;
        g.at(3, 2) = 1;
        g.at(3, 3) = -1;
        CHECK(matrix_order(g) == 5);
        CHECK_THROWS_AS(fixed_components(g), std::invalid_argument);
    }
}

TEST_CASE("minimum fixed codimension") {
    CHECK(min_fixed_codimension(make_action(1, {diag({1, -1, 1, -1})})) == 2);
    CHECK(min_fixed_codimension(make_action(1, {diag({1, 1, -1, -1})})) == 2);
    // -id fixes all of projective space: codimension 0 under the linear
    // reading of "non-identity".
    CHECK(min_fixed_codimension(make_action(1, {diag({-1, -1, -1, -1})})) == 0);

    CHECK_THROWS_AS(min_fixed_codimension(make_action(1, {RationalMatrix::identity(4)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_fixed_codimension(make_action(1, {diag({1, 2, 1, 1})})),
                    std::invalid_argument);
}

TEST_CASE("eigenvalue relation at coordinate fixed points") {
    SymplecticAmbient amb = make_ambient(1);

    SUBCASE("sign flip passes at every axis") {
        RationalMatrix g = diag({1, -1, 1, -1});
        for (int axis = 0; axis < 4; ++axis) {
            auto rep = eigenvalue_relation_check(g, amb, axis);
            CHECK(rep.passed);
            CHECK(rep.xi0 == 1);
            CHECK(rep.xi0_present);
            CHECK(rep.multiset_ok);
            CHECK(rep.product_applicable);
            CHECK(rep.product_ok);
        }
        auto rep = eigenvalue_relation_check(g, amb, 1);
        CHECK(rep.lambda_v == -1);
        CHECK(rep.tangent_weights == RatVec{Rat(-1), Rat(-1), Rat(1)});
    }

    SUBCASE("an omega-incompatible involution fails the product relation") {
        auto rep = eigenvalue_relation_check(diag({1, -1, 1, 1}), amb, 0);
        CHECK(rep.xi0_present);
        CHECK(rep.multiset_ok);
        CHECK(rep.product_applicable);
        CHECK_FALSE(rep.product_ok);
        CHECK_FALSE(rep.passed);
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(eigenvalue_relation_check(pair_rotation(1), amb, 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(eigenvalue_relation_check(diag({1, -1, 1, -1}), amb, 4),
                        std::invalid_argument);
        CHECK_THROWS_AS(eigenvalue_relation_check(diag({2, 1, 1, 1}), amb, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("quotient verdict") {
    QuotientVerdict good = quotient_verdict(make_action(1, {diag({1, -1, 1, -1})}));
    CHECK(good.induced);
    CHECK(good.smooth_ambient_condition_vacuous);

    QuotientVerdict bad = quotient_verdict(make_action(1, {diag({1, 1, -1, -1})}));
    CHECK_FALSE(bad.induced);
    CHECK(bad.violating_generator == 0);
    CHECK(bad.violating_transform.kind == OmegaClass::Negates);

    CHECK_THROWS_AS(quotient_verdict(make_action(0, {RationalMatrix::identity(2)})),
                    std::invalid_argument);
}

}  // TEST_SUITE
