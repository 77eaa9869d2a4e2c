#include <cstdint>

#include "doctest.h"

#include "contact_atlas/nilpotent.hpp"

using namespace contact_atlas;

namespace {

RatVec point(std::initializer_list<long long> xs) {
    RatVec v;
    for (long long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_SUITE("nilpotent") {

TEST_CASE("block map values at pinned points") {
    auto blocks = psi_map(1, point({1, 2, 3, 4}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].at(0, 0) == 3);
    CHECK(blocks[0].at(0, 1) == 1);
    CHECK(blocks[0].at(1, 0) == -9);
    CHECK(blocks[0].at(1, 1) == -3);
    CHECK(blocks[1].at(0, 0) == 8);
    CHECK(blocks[1].at(0, 1) == 4);
    CHECK(blocks[1].at(1, 0) == -16);
    CHECK(blocks[1].at(1, 1) == -8);

    CHECK(verify_image_properties(blocks).all());
    CHECK(verify_image_properties(psi_map(1, point({0, 0, 0, 0}))).all());

    CHECK_THROWS_AS(psi_map(1, point({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("six-variable map values at pinned points") {
    SUBCASE("zero goes to zero") {
        auto [sp4, sl2] = phi_map(point({0, 0, 0, 0, 0, 0}));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(sp4.at(r, c) == 0);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) CHECK(sl2.at(r, c) == 0);
    }
    SUBCASE("first coordinate axis") {
        auto [sp4, sl2] = phi_map(point({1, 0, 0, 0, 0, 0}));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(sp4.at(r, c) == (r == 0 && c == 2 ? 1 : 0));
        CHECK(sl2.at(0, 0) == 0);
    }
    SUBCASE("mixed point exercises both components") {
        auto [sp4, sl2] = phi_map(point({0, 1, 0, 0, 1, 0}));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(sp4.at(r, c) == 0);
        CHECK(sl2.at(0, 0) == 1);
        CHECK(sl2.at(0, 1) == 1);
        CHECK(sl2.at(1, 0) == -1);
        CHECK(sl2.at(1, 1) == -1);
    }
    SUBCASE("generic point satisfies all image predicates") {
        auto [sp4, sl2] = phi_map(point({1, 2, 3, 4, 5, 6}));
        CHECK(verify_image_properties({sp4, sl2}).all());
    }
}

TEST_CASE("image predicates flag violations") {
    RationalMatrix not_traceless(2, 2);
    not_traceless.at(0, 0) = 1;
    auto rep = verify_image_properties({not_traceless});
    CHECK_FALSE(rep.traceless);
    CHECK_FALSE(rep.all());

    // Traceless but rank 2 and not square-zero.
    RationalMatrix rank2(2, 2);
    rank2.at(0, 1) = 1;
    rank2.at(1, 0) = 1;
    auto rep2 = verify_image_properties({rank2});
    CHECK(rep2.traceless);
    CHECK_FALSE(rep2.rank_le_1);
    CHECK_FALSE(rep2.nilpotent);

    // A 4x4 nilpotent rank-1 matrix outside the pairing-compatible algebra.
    RationalMatrix outside(4, 4);
    outside.at(0, 1) = 1;
    auto rep3 = verify_image_properties({outside});
    CHECK(rep3.traceless);
    CHECK(rep3.rank_le_1);
    CHECK(rep3.nilpotent);
    CHECK_FALSE(rep3.algebra_membership);

    CHECK_THROWS_AS(verify_image_properties({RationalMatrix(3, 3)}),
                    std::invalid_argument);
}

TEST_CASE("sampled verifications") {
    SamplePlan plan;
    plan.sample_count = 200;
    plan.seed = 11;

    CHECK(verify_image_properties_sampled(psi_quadratic_map(1), plan));
    CHECK(verify_image_properties_sampled(psi_quadratic_map(2), plan));
    CHECK(verify_image_properties_sampled(phi_quadratic_map(), plan));

    CHECK(verify_homogeneity(psi_quadratic_map(1), plan));
    CHECK(verify_homogeneity(phi_quadratic_map(), plan));

    SUBCASE("invariance holds for the sign flips that pair coordinates") {
        CHECK(verify_invariance(psi_quadratic_map(1), {{1, -1, 1, -1}}, plan));
        CHECK(verify_invariance(phi_quadratic_map(), {{1, -1, 1, 1, -1, 1}}, plan));
    }
    SUBCASE("invariance fails for a one-sided flip") {
        CHECK_FALSE(verify_invariance(psi_quadratic_map(1), {{-1, 1, 1, 1}}, plan));
    }
    SUBCASE("sign pattern validation") {
        CHECK_THROWS_AS(verify_invariance(psi_quadratic_map(1), {{1, -1}}, plan),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_invariance(psi_quadratic_map(1), {{1, 2, 1, 1}}, plan),
                        std::invalid_argument);
    }
    SUBCASE("plan validation") {
        SamplePlan bad = plan;
        bad.sample_count = 0;
        CHECK_THROWS_AS(verify_homogeneity(psi_quadratic_map(1), bad),
                        std::invalid_argument);
        bad = plan;
        bad.coordinate_range = 0;
        CHECK_THROWS_AS(verify_homogeneity(psi_quadratic_map(1), bad),
                        std::invalid_argument);
    }
}

TEST_CASE("orbit poset structure") {
    OrbitPoset poset = orbit_poset(3);
    CHECK(poset.size() == 8);
    CHECK(poset.weight(0b101) == 2);
    CHECK(poset.orbit_dim(0b101) == 4);
    CHECK(poset.projectivized_dim(0b101) == 3);
    CHECK(poset.projectivized_dim(0) == -1);
    CHECK(poset.leq(0b001, 0b011));
    CHECK_FALSE(poset.leq(0b100, 0b011));
    CHECK(poset.lower_covers(0b011) == std::vector<std::uint32_t>{0b010, 0b001});
    CHECK(poset.bits(0b101) == std::vector<int>{1, 0, 1});

    CHECK_THROWS_AS(orbit_poset(0), std::invalid_argument);
    CHECK_THROWS_AS(orbit_poset(21), std::invalid_argument);
}

TEST_CASE("stratification parity") {
    for (int k = 1; k <= 6; ++k) CHECK(stratification_parity(k));
}

TEST_CASE("signature generators are hit by the block map") {
    const int k = 3;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        RatVec x(2 * k, Rat(0));
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) x[b] = 1;
        CHECK(psi_map(k - 1, x) == signature_generator(k, mask));
    }
}

TEST_CASE("orbit pairing at a pinned point") {
    RatVec x = point({1, 2, 3, 4});
    RatVec v(4, Rat(0)), w(4, Rat(0));
    v[0] = 1;
    w[2] = 1;  // the symplectic partner of coordinate 0
    KkSampleResult r = kk_pairing_at(1, x, v, w);
    CHECK(r.realized);
    CHECK(r.omega == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.kk == doctest::Approx(2.0).epsilon(1e-12));

    SUBCASE("vanishing block collapses the orbit pairing") {
        // Both coordinates of the first block are zero, so the pushforward
        // demand degenerates and the orbit side reads 0 while the standard
        // pairing does not. The sampled comparison skips such points.
        RatVec degenerate = point({0, 1, 0, 1});
        KkSampleResult bad = kk_pairing_at(1, degenerate, v, w);
        CHECK(bad.kk == 0.0);
        CHECK(bad.omega == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pairing comparison over sampled points") {
    SamplePlan plan;
    plan.sample_count = 100;
    plan.seed = 0;

    KkReport rep = kk_pullback_check(1, plan);
    CHECK(rep.samples_used + rep.samples_skipped == 100);
    CHECK(rep.samples_used > 0);
    CHECK(rep.pair_count == rep.samples_used * 5);
    CHECK(rep.constant == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.max_residual < 1e-9);

    SUBCASE("runs are deterministic") {
        KkReport again = kk_pullback_check(1, plan);
        CHECK(again.constant == rep.constant);
        CHECK(again.max_residual == rep.max_residual);
        CHECK(again.samples_used == rep.samples_used);
    }
    SUBCASE("three-block case") {
        KkReport three = kk_pullback_check(2, plan);
        CHECK(three.constant == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(three.max_residual < 1e-9);
    }
}

}  // TEST_SUITE
