#include <random>

#include "doctest.h"

#include "contact_atlas/lattice.hpp"
#include "contact_atlas/rational_linalg.hpp"

using namespace contact_atlas;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

IntegerMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    IntegerMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

// Row echelon with positive pivots and entries above each pivot reduced into
// [0, pivot).
void check_hermite_shape(const IntegerMatrix& h) {
    int prev_col = -1;
    bool zero_tail = false;
    for (int r = 0; r < h.rows; ++r) {
        int lead = -1;
        for (int c = 0; c < h.cols; ++c)
            if (h.at(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) {
            zero_tail = true;
            continue;
        }
        CHECK_FALSE(zero_tail);
        CHECK(lead > prev_col);
        CHECK(h.at(r, lead) > 0);
        for (int above = 0; above < r; ++above) {
            CHECK(h.at(above, lead) >= 0);
            CHECK(h.at(above, lead) < h.at(r, lead));
        }
        prev_col = lead;
    }
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("hermite normal form of a pinned matrix") {
    IntegerMatrix a = from_rows({{2, 4}, {1, 3}});
    auto [h, u] = hermite_normal_form(a);
    CHECK(u * a == h);
    CHECK(h == from_rows({{1, 1}, {0, 2}}));
    Int du = det(u);
    CHECK((du == 1 || du == -1));
}

TEST_CASE("hermite normal form invariants on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        IntegerMatrix a = random_matrix(rng, rows, cols, 6);
        auto [h, u] = hermite_normal_form(a);
        CHECK(u * a == h);
        Int du = det(u);
        CHECK((du == 1 || du == -1));
        check_hermite_shape(h);
    }
}

TEST_CASE("smith normal form of pinned matrices") {
    SUBCASE("diagonal input regroups into invariant factors") {
        auto snf = smith_normal_form(from_rows({{4, 0}, {0, 6}}));
        CHECK(snf.D.at(0, 0) == 2);
        CHECK(snf.D.at(1, 1) == 12);
    }
    SUBCASE("determinant 3") {
        auto snf = smith_normal_form(from_rows({{2, 1}, {1, 2}}));
        CHECK(snf.D.at(0, 0) == 1);
        CHECK(snf.D.at(1, 1) == 3);
    }
    SUBCASE("identity is fixed") {
        auto snf = smith_normal_form(IntegerMatrix::identity(3));
        CHECK(snf.D == IntegerMatrix::identity(3));
    }
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(926113);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        IntegerMatrix a = random_matrix(rng, rows, cols, 5);
        auto snf = smith_normal_form(a);
        CHECK(snf.U * a * snf.V == snf.D);
        Int du = det(snf.U), dv = det(snf.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int r = 0; r < snf.D.rows; ++r)
            for (int c = 0; c < snf.D.cols; ++c)
                if (r != c) CHECK(snf.D.at(r, c) == 0);
        int limit = std::min(rows, cols);
        for (int i = 0; i + 1 < limit; ++i) {
            CHECK(snf.D.at(i, i) >= 0);
            if (snf.D.at(i, i) != 0) CHECK(snf.D.at(i + 1, i + 1) % snf.D.at(i, i) == 0);
            if (snf.D.at(i, i) == 0) CHECK(snf.D.at(i + 1, i + 1) == 0);
        }
        if (rows == cols) {
            Int prod = 1;
            for (int i = 0; i < rows; ++i) prod *= snf.D.at(i, i);
            Int da = det(a);
            CHECK((prod == da || prod == -da));
        }
    }
}

TEST_CASE("determinant") {
    CHECK(det(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(det(IntegerMatrix::identity(4)) == 1);
    CHECK(det(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(det(from_rows({{-7}})) == -7);
    CHECK_THROWS_AS(det(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("sublattice index and cokernel invariants") {
    CHECK(sublattice_index(make_lattice_map(from_rows({{2, 0}, {0, 2}}))) == 4);
    CHECK(cokernel_invariants(make_lattice_map(from_rows({{2, 0}, {0, 2}}))) ==
          std::vector<Int>{2, 2});

    CHECK(sublattice_index(make_lattice_map(from_rows({{1, 1}, {1, -1}}))) == 2);
    CHECK(cokernel_invariants(make_lattice_map(from_rows({{1, 1}, {1, -1}}))) ==
          std::vector<Int>{2});

    CHECK(sublattice_index(make_lattice_map(IntegerMatrix::identity(3))) == 1);
    CHECK(cokernel_invariants(make_lattice_map(IntegerMatrix::identity(3))).empty());

    CHECK_THROWS_AS(sublattice_index(make_lattice_map(from_rows({{1, 1}, {2, 2}}))),
                    std::invalid_argument);
}

TEST_CASE("primitivize") {
    CHECK(primitivize({Int(4), Int(-6)}) == IntVec{Int(2), Int(-3)});
    CHECK(primitivize({Int(-3), Int(0)}) == IntVec{Int(-1), Int(0)});
    CHECK_THROWS_AS(primitivize({Int(0), Int(0)}), std::invalid_argument);
    CHECK(primitivize({Int(5)}) == IntVec{Int(1)});
}

TEST_CASE("integer solvability") {
    IntegerMatrix a = from_rows({{2, 0}, {0, 3}});
    IntVec x;
    CHECK(solve_integer(a, {Int(4), Int(9)}, &x));
    CHECK(x == IntVec{Int(2), Int(3)});
    CHECK_FALSE(solve_integer(a, {Int(1), Int(0)}));

    // Underdetermined but solvable.
    IntegerMatrix wide = from_rows({{2, 3}});
    IntVec y;
    CHECK(solve_integer(wide, {Int(1)}, &y));
    CHECK(Int(2) * y[0] + Int(3) * y[1] == 1);
}

TEST_CASE("rational rank and linear solve") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    CHECK(rank(a) == 1);
    CHECK(rank(RationalMatrix(3, 3)) == 0);

    RationalMatrix b(2, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = 1;
    b.at(1, 1) = 1;
    auto sol = solve_linear(b, {Rat(3), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);

    // Inconsistent system.
    CHECK_FALSE(solve_linear(a, {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("homogeneous feasibility") {
    using LC = LinearConstraint;
    auto make = [](std::initializer_list<int> c, LC::Rel rel) {
        RatVec v;
        for (int x : c) v.push_back(Rat(x));
        return LC{v, rel};
    };
    auto ge = [&](std::initializer_list<int> c) { return make(c, LC::Rel::Ge); };
    auto gt = [&](std::initializer_list<int> c) { return make(c, LC::Rel::Gt); };
    auto eq = [&](std::initializer_list<int> c) { return make(c, LC::Rel::Eq); };

    CHECK(homogeneous_feasible({eq({1, 1}), gt({1, 0})}, 2));
    CHECK_FALSE(homogeneous_feasible({gt({1, 0}), gt({-1, 0})}, 2));
    CHECK_FALSE(homogeneous_feasible({eq({1, 0}), gt({1, 0})}, 2));
    CHECK(homogeneous_feasible({ge({1, 0}), ge({0, 1}), gt({1, 1})}, 2));
}

}  // TEST_SUITE
