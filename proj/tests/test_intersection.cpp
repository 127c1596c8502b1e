#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "seshadri/cluster.hpp"
#include "seshadri/intersection.hpp"
#include "seshadri/polynomial_io.hpp"
#include "test_helpers.hpp"

using namespace seshadri;

namespace {

const UniSeries kQuarticBranch({{2, 1}, {4, 1}, {8, 1}});

Valuation contact(const char* curve, const UniSeries& g)
{
    return local_intersection({LocalCurve(parse_polynomial(curve)), BranchJet(g)});
}

oracle::PolyInY to_poly_in_y(const BiSeries& f)
{
    oracle::PolyInY out(static_cast<std::size_t>(std::max(f.y_degree(), 0)) + 1);
    for (const auto& [m, c] : f.terms()) {
        auto& column = out[static_cast<std::size_t>(m.y)];
        if (column.size() <= static_cast<std::size_t>(m.x)) {
            column.resize(static_cast<std::size_t>(m.x) + 1);
        }
        column[static_cast<std::size_t>(m.x)] = c;
    }
    return out;
}

} // namespace

TEST_CASE("local_intersection examples")
{
    CHECK(contact("y", kQuarticBranch) == Valuation::exactly(2));
    CHECK(contact("x", kQuarticBranch) == Valuation::exactly(1));
    CHECK(contact("x", UniSeries({{1, 5}})) == Valuation::exactly(1));
    CHECK(contact("y - x^2 - x^4", kQuarticBranch) == Valuation::exactly(8));
    CHECK(contact("y - x^2", UniSeries({{2, 1}})) == Valuation::at_least(kExact));
    CHECK(local_intersection({LocalCurve(parse_polynomial("y - x^2")), BranchJet(UniSeries({{2, 1}}, 10))}) ==
          Valuation::at_least(10));
}

TEST_CASE("veronese_bound")
{
    CHECK(veronese_bound(1) == 3);
    CHECK(veronese_bound(2) == 6);
    CHECK(veronese_bound(3) == 10);
    CHECK(veronese_bound(0) == 1);
}

TEST_CASE("intersection dominates multiplicity and the cluster sum")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> gc(-4, 4);
    for (int i = 0; i < 300; ++i) {
        const BiSeries f = test::random_polynomial(rng, 6, 5, 9, false);
        if (f.is_zero()) {
            continue;
        }
        UniSeries::Terms gt;
        for (int e = 1; e <= 5; ++e) {
            gt[e] = gc(rng);
        }
        const BranchJet branch{UniSeries(gt)};
        const LocalCurve c(f);
        const Valuation meet = local_intersection({c, branch});
        CHECK(meet.value >= f.order().value);

        const int n = 2 + i % 5;
        const ClusterResult cl = cluster_multiplicities(normalize_branch(c, branch), n);
        REQUIRE(cl.determinate);
        CHECK(meet.value >= cl.total);
    }
}

TEST_CASE("local_intersection agrees with the resultant order")
{
    std::mt19937_64 rng(200);
    std::uniform_int_distribution<int> gdeg(1, 5);
    std::uniform_int_distribution<int> gc(-5, 5);
    int compared = 0;
    for (int i = 0; i < 250; ++i) {
        const BiSeries f = test::random_polynomial(rng, 5, 6, 9, i % 7 == 0);
        oracle::DensePoly g(static_cast<std::size_t>(gdeg(rng)) + 1);
        for (std::size_t e = 1; e < g.size(); ++e) {
            g[e] = gc(rng);
        }
        UniSeries::Terms gt;
        for (std::size_t e = 1; e < g.size(); ++e) {
            gt[static_cast<int>(e)] = g[e];
        }
        const Valuation ours = local_intersection({LocalCurve(f, {}, true), BranchJet(UniSeries(gt))});
        const int theirs = oracle::poly_order(oracle::resultant_with_graph(to_poly_in_y(f), g));
        if (theirs < 0) {
            CHECK(ours == Valuation::at_least(kExact));
        } else {
            CHECK(ours == Valuation::exactly(theirs));
        }
        ++compared;
    }
    CHECK(compared == 250);
}
