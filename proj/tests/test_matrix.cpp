#include <doctest.h>

#include <set>

#include "glq/coset.hpp"
#include "glq/io.hpp"
#include "glq/rng.hpp"

using namespace glq;

TEST_CASE("products and inverses") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat a = parse_mat("1 1; 0 1", f2);
    CHECK(Mat::identity(f2, 2) * a == a);
    CHECK(a * a == Mat::identity(f2, 2));  // involution in GL(2,2)
    Mat swap = parse_mat("0 1; 1 0", f2);
    CHECK(swap.inverse() == swap);
    Mat inv = a.inverse();
    CHECK(a * inv == Mat::identity(f2, 2));
    CHECK_THROWS_AS(parse_mat("1 1; 1 1", f2).inverse(), Singular);
    CHECK_THROWS_AS(a * Mat(f2, 3, 3), DimMismatch);
}

TEST_CASE("rref of the named cases") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    auto equal_rows = rref(parse_mat("1 1; 1 1", f2));
    CHECK(equal_rows.rank == 1);
    CHECK(equal_rows.pivots == std::vector<int>{0});
    CHECK(rref(Mat(f2, 3, 4)).rank == 0);
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Mat m = rng.invertible(f2, 3);
        auto r = rref(m);
        CHECK(r.rank == 3);
        CHECK(r.reduced == Mat::identity(f2, 3));
    }
}

TEST_CASE("rref is idempotent and rank is submultiplicative") {
    Rng rng(5);
    for (const FieldSpec* f : {&FieldSpec::make(2, 1), &FieldSpec::make(3, 1)}) {
        for (int trial = 0; trial < 40; ++trial) {
            Mat m = rng.matrix(*f, rng.range(1, 4), rng.range(1, 4));
            auto r = rref(m);
            CHECK(rref(r.reduced).reduced == r.reduced);
            Mat n = rng.matrix(*f, m.cols(), rng.range(1, 4));
            CHECK(rank(m * n) <= std::min(rank(m), rank(n)));
        }
    }
}

TEST_CASE("solve_affine trivial cases") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat b(f2, 2, 1);
    b.setval(0, 0, 1);
    auto sol = solve_affine(Mat::identity(f2, 2), b);
    REQUIRE(sol.has_value());
    CHECK(sol->particular == b);
    CHECK(sol->nullspace_rows.rows() == 0);

    auto all = solve_affine(Mat(f2, 2, 2), Mat(f2, 2, 1));
    REQUIRE(all.has_value());
    CHECK(all->particular.is_zero());
    CHECK(all->nullspace_rows.rows() == 2);

    Mat bad(f2, 2, 1);
    bad.setval(0, 0, 1);
    CHECK_FALSE(solve_affine(Mat(f2, 2, 2), bad).has_value());
}

TEST_CASE("solve_affine matches the brute-force solution set") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat a = parse_mat("1 1", f2);
    Mat b(f2, 1, 1);
    b.setval(0, 0, 1);
    // oracle: enumerate all four vectors of F_2^2
    std::set<std::pair<int, int>> expected;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if ((x + y) % 2 == 1) expected.insert({x, y});
    REQUIRE(expected.size() == 2);

    auto sol = solve_affine(a, b);
    REQUIRE(sol.has_value());
    std::set<std::pair<int, int>> got;
    REQUIRE(sol->nullspace_rows.rows() == 1);
    for (int c = 0; c < 2; ++c) {
        int x = sol->particular.val(0, 0) ^ (c * sol->nullspace_rows.val(0, 0));
        int y = sol->particular.val(1, 0) ^ (c * sol->nullspace_rows.val(0, 1));
        got.insert({x, y});
    }
    CHECK(got == expected);
}

TEST_CASE("block assembly") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat m = parse_mat("1 1; 0 1", f2);

    BlockLayout one;
    one.field = &f2;
    one.row_blocks = {2};
    one.col_blocks = {2};
    one.cells = {{BlockCell::given(m)}};
    CHECK(block_assemble(one) == m);

    CHECK(pad_diag(m, 1, 2) == parse_mat("1 0 0 0 0; 0 1 1 0 0; 0 0 1 0 0; 0 0 0 1 0; 0 0 0 0 1", f2));

    BlockLayout bad = one;
    bad.cells = {{BlockCell::given(parse_mat("1", f2))}};
    CHECK_THROWS_AS(block_assemble(bad), LayoutInconsistent);
    BlockLayout bad2 = one;
    bad2.row_blocks = {3};
    bad2.cells = {{BlockCell::id()}};
    CHECK_THROWS_AS(block_assemble(bad2), LayoutInconsistent);
}

TEST_CASE("the interleaving 0-1 matrix at unit sizes") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat j = j_beta_matrix(f2, 1, 1, 1);
    Mat expected = parse_mat("0 1 0 0 0; 1 0 0 0 0; 0 0 1 0 0; 0 0 0 0 1; 0 0 0 1 0", f2);
    CHECK(j == expected);
    CHECK(j * j == Mat::identity(f2, 5));
}

TEST_CASE("zero-sized matrices behave") {
    const FieldSpec& f2 = FieldSpec::make(2, 1);
    Mat empty(f2, 0, 3);
    Mat tall(f2, 3, 0);
    Mat prod = empty * Mat(f2, 3, 2);
    CHECK(prod.rows() == 0);
    CHECK(prod.cols() == 2);
    CHECK((tall * empty).rows() == 3);
    CHECK(rank(empty) == 0);
    CHECK(Mat::identity(f2, 0).is_identity());
}
