#include "doctest.h"

#include <random>
#include <vector>

#include "seshadri/covering.hpp"

using namespace seshadri;

TEST_CASE("steffens_bounds examples")
{
    const auto square = steffens_bounds({4, 1, {}}, 1);
    CHECK(square.lower == 2);
    CHECK(square.upper == SurdValue(Rat(2)));
    CHECK(square.maximal);

    const auto two_points = steffens_bounds({2, 1, {}}, 2);
    CHECK(two_points.lower == 1);
    CHECK(two_points.upper == SurdValue(Rat(1)));
    CHECK(two_points.maximal);

    const auto seven = steffens_bounds({7, 1, {}}, 1);
    CHECK(seven.lower == 2);
    CHECK(seven.upper == SurdValue(1, 7));
    CHECK_FALSE(seven.maximal);

    const auto general_y = steffens_bounds({3, 3, {}}, 1);
    CHECK(general_y.maximal);
    CHECK(general_y.lower == 3);

    CHECK_THROWS_AS(steffens_bounds({2, 1, {}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(steffens_bounds({1, 1, {}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(steffens_bounds({2, 0, {}}, 1), std::invalid_argument);
}

TEST_CASE("steffens_bounds: lower <= upper and maximal iff r n L^2 is a square")
{
    for (int n = 2; n <= 20; ++n) {
        for (int l2 = 1; l2 <= 9; ++l2) {
            for (int r = 1; r <= 20; ++r) {
                const auto b = steffens_bounds({n, l2, {}}, r);
                const long product = static_cast<long>(r) * n * l2;
                long root = 0;
                while ((root + 1) * (root + 1) <= product) {
                    ++root;
                }
                CHECK(surd_compare(SurdValue(b.lower), b.upper) != std::strong_ordering::greater);
                CHECK(b.lower == make_rat(root, r));
                CHECK(b.maximal == (root * root == product));
            }
        }
    }
}

TEST_CASE("numeric_inequality_check examples")
{
    const std::vector<std::int64_t> zeros{0, 0, 0};
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(numeric_inequality_check(zeros, i));
    }
    CHECK(numeric_inequality_check(std::vector<std::int64_t>{1}, 1));
    CHECK(numeric_inequality_check(std::vector<std::int64_t>{3, 1, 2}, 2));
    CHECK_THROWS_AS(numeric_inequality_check(zeros, 0), std::out_of_range);
    CHECK_THROWS_AS(numeric_inequality_check(zeros, 4), std::out_of_range);
}

TEST_CASE("numeric_inequality_check holds on random vectors")
{
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> entry(0, 30);
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(len(rng)));
        for (auto& e : v) {
            e = entry(rng);
        }
        for (std::size_t i0 = 1; i0 <= v.size(); ++i0) {
            REQUIRE(numeric_inequality_check(v, i0));
        }
    }
}

TEST_CASE("nagata_upper examples and linearity")
{
    CHECK(nagata_upper({9, 1, {}}, 1, SurdValue(make_rat(1, 3))) == SurdValue(Rat(3)));
    CHECK(nagata_upper({2, 1, {}}, 1, SurdValue(make_rat(1, 2))) == SurdValue(Rat(1)));
    CHECK(nagata_upper({5, 1, {}}, 1, SurdValue(make_rat(2, 5))) == SurdValue(Rat(2)));
    const SurdValue e = SurdValue::sqrt(make_rat(1, 11));
    CHECK(nagata_upper({11, 1, {}}, 1, e * Rat(2)) == nagata_upper({11, 1, {}}, 1, e) * Rat(2));
}

TEST_CASE("nagata_conjectural")
{
    CHECK(nagata_conjectural(9) == SurdValue(make_rat(1, 3)));
    CHECK(nagata_conjectural(16) == SurdValue(make_rat(1, 4)));
    CHECK(nagata_conjectural(10) == SurdValue(make_rat(1, 10), 10));
    CHECK_THROWS_AS(nagata_conjectural(8), std::invalid_argument);
}

TEST_CASE("known plane constants table")
{
    const auto t = known_plane_constants();
    REQUIRE(t.size() == 9);
    const std::vector<Rat> expected{1, make_rat(1, 2), make_rat(1, 2), make_rat(1, 2), make_rat(2, 5),
                                    make_rat(2, 5), make_rat(3, 8), make_rat(6, 17), make_rat(1, 3)};
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(t[i].points == static_cast<int>(i) + 1);
        CHECK(t[i].value == expected[i]);
        CHECK_FALSE(t[i].source.empty());
    }
    CHECK_FALSE(known_plane_constant(10).has_value());
    CHECK(*known_plane_constant(8) == make_rat(6, 17));
}

TEST_CASE("covering spec")
{
    const CoveringSpec s{8, 1, 2};
    CHECK(s.pullback_l_squared() == 8);
    CHECK(*s.branch_degree() == 16);
    CHECK_THROWS(CoveringSpec({2, 1, 0}).validate());
}
