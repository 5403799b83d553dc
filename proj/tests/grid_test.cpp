#include "magicsq/grid.hpp"

#include "golden_tables.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace magicsq;

namespace {

std::vector<std::vector<long long>> as_rows(const OffsetGrid& grid) {
    const long long s = grid.order().value();
    std::vector<std::vector<long long>> rows(static_cast<size_t>(s));
    for (long long i = 0; i < s; ++i) {
        for (long long c = 0; c < s; ++c) rows[static_cast<size_t>(i)].push_back(grid.at(i, c));
    }
    return rows;
}

}  // namespace

TEST_CASE("orders must be odd and positive") {
    CHECK_THROWS_AS(Order(4), std::invalid_argument);
    CHECK_THROWS_AS(Order(0), std::invalid_argument);
    CHECK_THROWS_AS(Order(-3), std::invalid_argument);
    CHECK_THROWS_WITH(Order(4), "order must be odd");
    CHECK(Order(1).middle() == 0);
    CHECK(Order(9).middle() == 4);
    CHECK(Order(201).cell_count() == 201 * 201);
}

TEST_CASE("square A is the row-major base sequence") {
    SquareA a3 = build_square_A(Order(3));
    CHECK(as_rows(OffsetGrid::from_cells(Order(3), a3.cells())) ==
          std::vector<std::vector<long long>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(build_square_A(Order(1)).cells() == std::vector<long long>{0});
    SquareA a5 = build_square_A(Order(5));
    for (long long i = 0; i < 5; ++i) {
        for (long long c = 0; c < 5; ++c) CHECK(a5.at(i, c) == i * 5 + c);
    }
}

TEST_CASE("rule-based grids match the reference tables") {
    CHECK(as_rows(offset_grid_rules(Order(3))) == golden::kGrid3);
    CHECK(as_rows(offset_grid_rules(Order(5))) == golden::kGrid5);
    CHECK(as_rows(offset_grid_rules(Order(7))) == golden::kGrid7);
    OffsetGrid g7 = offset_grid_rules(Order(7));
    CHECK(g7.at(4, 3) == 0);
    CHECK(g7.at(0, 0) == 21);
    CHECK(as_rows(offset_grid_rules(Order(1))) == std::vector<std::vector<long long>>{{0}});
}

TEST_CASE("closed form matches the reference tables cell for cell") {
    CHECK(offset_cell(3, 2, 1) == 0);
    CHECK(offset_cell(9, 0, 1) == 77);
    CHECK(offset_cell(13, 5, 12) == 119);
    CHECK(as_rows(offset_grid_closed_form(Order(9))) == golden::kGrid9);
    CHECK(as_rows(offset_grid_closed_form(Order(11))) == golden::kGrid11);
}

TEST_CASE("both builders agree across a sweep of orders") {
    for (long long s = 1; s <= 51; s += 2) {
        CAPTURE(s);
        REQUIRE(offset_grid_rules(Order(s)).cells() ==
                offset_grid_closed_form(Order(s)).cells());
    }
}

TEST_CASE("offset grids are permutations with balanced lines") {
    for (long long s : {1LL, 3LL, 5LL, 9LL, 15LL, 33LL}) {
        CAPTURE(s);
        OffsetGrid grid = offset_grid_rules(Order(s));
        std::vector<long long> sorted = grid.cells();
        std::sort(sorted.begin(), sorted.end());
        bool is_permutation = true;
        for (long long k = 0; k < s * s; ++k) {
            if (sorted[static_cast<size_t>(k)] != k) is_permutation = false;
        }
        CHECK(is_permutation);

        const long long target = s * (s * s - 1) / 2;
        long long diag_lr = 0, diag_rl = 0;
        for (long long t = 0; t < s; ++t) {
            long long row = 0, col = 0;
            for (long long k = 0; k < s; ++k) {
                row += grid.at(t, k);
                col += grid.at(k, t);
            }
            CHECK(row == target);
            CHECK(col == target);
            diag_lr += grid.at(t, t);
            diag_rl += grid.at(t, s - 1 - t);
        }
        CHECK(diag_lr == target);
        CHECK(diag_rl == target);
        CHECK(grid.at(s / 2, s / 2) == (s * s - 1) / 2);
    }
}

TEST_CASE("antisymmetry about the center") {
    std::mt19937_64 rng(42);
    for (long long s : {3LL, 5LL, 9LL, 21LL, 101LL}) {
        OffsetGrid grid = offset_grid_rules(Order(s));
        std::uniform_int_distribution<long long> pick(0, s - 1);
        for (int k = 0; k < 64; ++k) {
            long long i = pick(rng), c = pick(rng);
            CHECK(grid.at(i, c) + grid.at(s - 1 - i, s - 1 - c) == s * s - 1);
        }
    }
}

TEST_CASE("wrapped diagonals carry blocks and residue classes") {
    for (long long s : {3LL, 5LL, 9LL, 13LL}) {
        CAPTURE(s);
        OffsetGrid grid = offset_grid_rules(Order(s));
        auto wrap = [s](long long x) { return ((x % s) + s) % s; };
        // down-right: one consecutive block, +1 steps with a single 1-s wrap
        for (long long d = 0; d < s; ++d) {
            long long lo = s * s, wraps = 0;
            for (long long i = 0; i < s; ++i) {
                long long v = grid.at(i, wrap(i + d));
                lo = std::min(lo, v);
                long long diff = grid.at(wrap(i + 1), wrap(i + 1 + d)) - v;
                if (diff == 1 - s) {
                    ++wraps;
                } else {
                    CHECK(diff == 1);
                }
            }
            CHECK(wraps == 1);
            CHECK(lo % s == 0);
        }
        // down-left: one residue class, +s steps with a single s-s^2 wrap
        for (long long a = 0; a < s; ++a) {
            long long wraps = 0;
            long long residue = grid.at(0, a) % s;
            for (long long i = 0; i < s; ++i) {
                long long v = grid.at(i, wrap(a - i));
                CHECK(v % s == residue);
                long long diff = grid.at(wrap(i + 1), wrap(a - i - 1)) - v;
                if (diff == s - s * s) {
                    ++wraps;
                } else {
                    CHECK(diff == s);
                }
            }
            CHECK(wraps == 1);
        }
    }
}

TEST_CASE("middle row and column hold square A's diagonals in symmetric pairs") {
    OffsetGrid grid = offset_grid_rules(Order(5));
    const long long m = 2;
    std::vector<long long> middle_row, middle_col;
    for (long long t = 0; t < 5; ++t) {
        middle_row.push_back(grid.at(m, t));
        middle_col.push_back(grid.at(t, m));
    }
    CHECK(middle_row == std::vector<long long>{16, 4, 12, 20, 8});
    CHECK(middle_row[0] + middle_row[4] == 24);
    CHECK(middle_row[1] + middle_row[3] == 24);
    CHECK(middle_col[0] + middle_col[4] == 24);
    CHECK(middle_col[1] + middle_col[3] == 24);

    SquareA a = build_square_A(Order(5));
    std::vector<long long> a_anti, a_main;
    for (long long t = 0; t < 5; ++t) {
        a_anti.push_back(a.at(t, 4 - t));
        a_main.push_back(a.at(t, t));
    }
    std::sort(middle_row.begin(), middle_row.end());
    std::sort(middle_col.begin(), middle_col.end());
    std::sort(a_anti.begin(), a_anti.end());
    std::sort(a_main.begin(), a_main.end());
    CHECK(middle_row == a_anti);
    CHECK(middle_col == a_main);
}

TEST_CASE("magic constants from the formula") {
    CHECK(magic_constant(Order(3), Scalar(0)) == Scalar(12));
    CHECK(magic_constant(Order(3), parse_scalar("1+i")) == parse_scalar("15+3i"));
    CHECK(magic_constant(Order(3), parse_scalar("1/2")) == parse_scalar("27/2"));
    CHECK(magic_constant(Order(3), Scalar(193)) == Scalar(591));
    CHECK(magic_constant(Order(7), Scalar(2)) == Scalar(182));
    CHECK(magic_constant(Order(9), Scalar(44)) == Scalar(756));
    CHECK(magic_constant(Order(35), Scalar(0)) == Scalar(21420));
    CHECK(magic_constant(Order(1), parse_scalar("7/3")) == parse_scalar("7/3"));
}

TEST_CASE("the normal constant is the offset-one case") {
    CHECK(normal_magic_constant(Order(3)) == Scalar(15));
    CHECK(normal_magic_constant(Order(5)) == Scalar(65));
    CHECK(normal_magic_constant(Order(1)) == Scalar(1));
    for (long long s = 1; s <= 99; s += 2) {
        CHECK(normal_magic_constant(Order(s)) == magic_constant(Order(s), Scalar(1)));
    }
}

TEST_CASE("the constant is linear in the offset") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pick(-500, 500);
    std::uniform_int_distribution<long long> den(1, 40);
    for (int k = 0; k < 50; ++k) {
        Scalar a = Scalar::gaussian(Rational(pick(rng), den(rng)), Rational(pick(rng), den(rng)));
        Scalar b = Scalar::rational(pick(rng), den(rng));
        Order s(2 * (k % 12) + 3);
        CHECK(magic_constant(s, a) + Scalar(s.value()) * b == magic_constant(s, a + b));
    }
}

TEST_CASE("instantiate shifts the grid by the offset") {
    OffsetGrid g3 = offset_grid_rules(Order(3));

    MagicSquare at33 = instantiate(g3, Scalar(33));
    std::vector<long long> expect33 = {36, 41, 34, 35, 37, 39, 40, 33, 38};
    for (size_t k = 0; k < 9; ++k) CHECK(at33.entries()[k] == Scalar(expect33[k]));

    MagicSquare neg = instantiate(g3, Scalar(-5));
    std::vector<long long> expect_neg = {-2, 3, -4, -3, -1, 1, 2, -5, 0};
    for (size_t k = 0; k < 9; ++k) CHECK(neg.entries()[k] == Scalar(expect_neg[k]));

    MagicSquare zero = instantiate(g3, Scalar(0));
    for (size_t k = 0; k < 9; ++k) CHECK(zero.entries()[k] == Scalar(g3.cells()[k]));

    // order five at offset one: entries are exactly 1..25
    MagicSquare five = instantiate(offset_grid_rules(Order(5)), Scalar(1));
    for (long long i = 0; i < 5; ++i) {
        for (long long c = 0; c < 5; ++c) {
            CHECK(five.at(i, c) == Scalar(offset_cell(5, i, c) + 1));
        }
    }

    MagicSquare gauss = instantiate(g3, parse_scalar("1+i"));
    CHECK(gauss.at(2, 1) == parse_scalar("1+i"));
    CHECK(gauss.at(0, 1) == parse_scalar("9+i"));
}
