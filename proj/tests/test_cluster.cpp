#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.hpp"
#include "seshadri/cluster.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/polynomial_io.hpp"
#include "test_helpers.hpp"

using namespace seshadri;

namespace {

LocalCurve curve(const char* text)
{
    return LocalCurve(parse_polynomial(text), text);
}

std::vector<std::pair<int, int>> support(const BiSeries& s)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [m, c] : s.terms()) {
        out.emplace_back(m.x, m.y);
    }
    return out;
}

} // namespace

TEST_CASE("normalize_branch examples")
{
    const BranchJet parabola(UniSeries({{2, 1}}));
    CHECK(normalize_branch(curve("y - x^2"), parabola).series == BiSeries::y());
    CHECK(normalize_branch(curve("y"), BranchJet(UniSeries())).series == BiSeries::y());
    CHECK(normalize_branch(curve("y^2 - x^3"), parabola).series == parse_polynomial("y^2 + 2x^2y + x^4 - x^3"));
}

TEST_CASE("normalize_branch with a truncated branch lowers precision")
{
    const BranchJet jet(UniSeries({{2, 1}}, 6));
    const LocalCurve out = normalize_branch(curve("y^2 - x^3"), jet);
    // (y + x^2 + O(x^6))^2: error terms of degree >= 6 + 1.
    CHECK(out.series.precision() == 7);
    CHECK(out.series == BiSeries(parse_polynomial("y^2 + 2x^2y + x^4 - x^3").terms(), 7));
}

TEST_CASE("cluster_multiplicities examples")
{
    const ClusterResult line = cluster_multiplicities(curve("x"), 3);
    CHECK(line.mults == std::vector<std::int64_t>{1, 0, 0});
    CHECK(line.total == 1);
    CHECK(line.determinate);

    const ClusterResult tangent = cluster_multiplicities(curve("y - x^3"), 3);
    CHECK(tangent.mults == std::vector<std::int64_t>{1, 1, 1});
    CHECK(tangent.total == 3);

    const ClusterResult cusp = cluster_multiplicities(curve("x^5 + y^2"), 3);
    CHECK(cusp.mults == std::vector<std::int64_t>{2, 2, 1});
    CHECK(cusp.total == 5);
    CHECK(strict_transform(parse_polynomial("x^5 + y^2"), 2) == parse_polynomial("x^3 + y^2"));

    CHECK_THROWS(cluster_multiplicities(curve("x"), 0));
}

TEST_CASE("pullback_mult and verify_prop51 examples")
{
    CHECK(pullback_mult(curve("x^5 + y^2"), 3) == Valuation::exactly(5));
    CHECK(pullback_mult(curve("y"), 4) == Valuation::exactly(4));
    CHECK(pullback_mult(curve("x"), 7) == Valuation::exactly(1));
    CHECK(verify_prop51(curve("x^5 + y^2"), 3));
    CHECK(verify_prop51(curve("x"), 5));
    CHECK(pullback_mult(LocalCurve(BiSeries::zero(12)), 3) == Valuation::at_least(12));
}

TEST_CASE("unit series stops the cluster walk")
{
    const LocalCurve unit(parse_polynomial("1 + x"), "unit", true);
    const ClusterResult r = cluster_multiplicities(unit, 4);
    CHECK(r.mults == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(r.total == 0);
    CHECK(verify_prop51(unit, 4));
    CHECK_THROWS_AS(LocalCurve(parse_polynomial("1 + x")), std::invalid_argument);
}

TEST_CASE("insufficient precision is reported, not guessed")
{
    // y^2 + x^3 known to order 3: m1 = 2, then the strict transform has precision 1.
    const LocalCurve truncated(BiSeries(parse_polynomial("y^2 + x^3").terms(), 3));
    const ClusterResult r = cluster_multiplicities(truncated, 3);
    CHECK_FALSE(r.determinate);
    CHECK(r.mults == std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(verify_prop51(truncated, 3), PrecisionShortfall);
}

TEST_CASE("pullback multiplicity equals the cluster sum, with the closed form on random curves")
{
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> nd(2, 6);
    std::uniform_int_distribution<int> terms(1, 6);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const BiSeries s = test::random_polynomial(rng, 8, terms(rng), 9, false);
        if (s.is_zero()) {
            continue;
        }
        const int n = nd(rng);
        const LocalCurve c(s);
        const ClusterResult r = cluster_multiplicities(c, n);
        REQUIRE(r.determinate);
        CHECK(r.mults == oracle::closed_form_cluster(support(s), n));
        CHECK(pullback_mult(c, n) == Valuation::exactly(static_cast<int>(r.total)));
        CHECK(verify_prop51(c, n));

        // Chain bound and zero absorption.
        std::int64_t used = 0;
        bool vanished = false;
        for (std::int64_t m : r.mults) {
            CHECK(m <= r.total - used);
            if (vanished) {
                CHECK(m == 0);
            }
            vanished = vanished || m == 0;
            used += m;
        }
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("truncation monotonicity")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const BiSeries s = test::random_polynomial(rng, 10, 5, 9, false);
        if (s.is_zero()) {
            continue;
        }
        const ClusterResult exact = cluster_multiplicities(LocalCurve(s), 4);
        for (Precision T : {4, 8, 12, 20, 40}) {
            const ClusterResult r = cluster_multiplicities(LocalCurve(s.truncated(T)), 4);
            if (r.determinate) {
                CHECK(r.mults == exact.mults);
            } else {
                // The certified prefix never disagrees.
                for (std::size_t k = 0; k < r.mults.size(); ++k) {
                    CHECK(r.mults[k] == exact.mults[k]);
                }
            }
        }
    }
}

TEST_CASE("cluster is invariant under x -> x + lambda x^2")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> lam(-5, 5);
    std::uniform_int_distribution<int> gc(-3, 3);
    for (int i = 0; i < 150; ++i) {
        const BiSeries s = test::random_polynomial(rng, 5, 4, 5, false);
        if (s.is_zero()) {
            continue;
        }
        UniSeries::Terms gt;
        for (int e = 1; e <= 4; ++e) {
            gt[e] = gc(rng);
        }
        const UniSeries g(gt);
        const Rat lambda = make_rat(lam(rng), 3);
        const BiSeries shift = BiSeries::x() + BiSeries::monomial(lambda, 2, 0);

        const BiSeries moved_curve = compose(s, shift, BiSeries::y());
        const BiSeries moved_g = compose(BiSeries::from_x(g), shift, BiSeries::y());
        UniSeries::Terms mg;
        for (const auto& [m, c] : moved_g.terms()) {
            mg.emplace(m.x, c);
        }

        const auto before = cluster_multiplicities(normalize_branch(LocalCurve(s), BranchJet(g)), 5);
        const auto after =
            cluster_multiplicities(normalize_branch(LocalCurve(moved_curve), BranchJet(UniSeries(mg))), 5);
        CHECK(before.mults == after.mults);
    }
}

TEST_CASE("implicit branch solving")
{
    // y - x^2 - x*y = 0  =>  y = x^2 / (1 - x) = x^2 + x^3 + ...
    const BranchJet jet = BranchJet::from_implicit(parse_polynomial("y - x^2 - x*y"), 8);
    CHECK(jet.g() == UniSeries({{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}, 8));
    // The solved jet satisfies the equation to the requested order.
    CHECK(series_substitute_y(parse_polynomial("y - x^2 - x*y"), jet.g()).is_zero());

    // 2y + y^2 - x^2 = 0 => y = x^2/2 - x^4/8 + x^6/16 - ...
    const BranchJet circle = BranchJet::from_implicit(parse_polynomial("2y + y^2 - x^2"), 7);
    CHECK(circle.g() == UniSeries({{2, make_rat(1, 2)}, {4, make_rat(-1, 8)}, {6, make_rat(1, 16)}}, 7));

    CHECK_THROWS_AS(BranchJet::from_implicit(parse_polynomial("x - y^2"), 5), std::invalid_argument);
    CHECK_THROWS_AS(BranchJet::from_implicit(parse_polynomial("1 + y"), 5), std::invalid_argument);
}

TEST_CASE("batch verification: serial and parallel agree")
{
    std::mt19937_64 rng(5151);
    std::vector<LocalCurve> curves;
    for (int i = 0; i < 400; ++i) {
        BiSeries s = test::random_polynomial(rng, 8, 5, 9, false);
        if (!s.is_zero()) {
            curves.emplace_back(i % 5 == 0 ? s.truncated(3) : s);
        }
    }
    for (int n = 2; n <= 6; ++n) {
        const BatchVerdict serial = verify_prop51_batch(curves, n, Exec::Serial);
        const BatchVerdict parallel = verify_prop51_batch(curves, n, Exec::Parallel);
        CHECK(serial == parallel);
        CHECK(serial.failures == 0);
        CHECK(serial.checked == curves.size());
    }
}
