#include "seshadri/cluster.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "seshadri/errors.hpp"

namespace seshadri {

LocalCurve::LocalCurve(BiSeries s, std::string name, bool misses)
    : series(std::move(s)), label(std::move(name)), misses_base_point(misses)
{
    if (!misses_base_point && series.precision() >= 1 && series.constant_term() != 0) {
        throw std::invalid_argument("curve does not pass through the base point");
    }
}

BranchJet::BranchJet(UniSeries g) : g_(std::move(g))
{
    if (g_.precision() >= 1 && g_.coeff(0) != 0) {
        throw std::invalid_argument("branch must pass through the origin (g(0) = 0)");
    }
}

BranchJet BranchJet::from_implicit(const BiSeries& F, Precision precision)
{
    if (precision < 1 || precision == kExact) {
        throw std::invalid_argument("implicit branch needs a finite precision >= 1");
    }
    if (F.precision() < 2) {
        throw std::invalid_argument("implicit branch equation known to too low an order");
    }
    if (F.constant_term() != 0) {
        throw std::invalid_argument("implicit branch does not pass through the origin");
    }
    const Rat fy = F.coeff(0, 1);
    if (fy == 0) {
        throw std::invalid_argument("implicit branch has dF/dy(0,0) = 0; it is not a graph y = g(x)");
    }
    const Precision target = std::min(precision, F.precision());
    // F(x, g + c x^e) = F(x, g) + c * fy * x^e + O(x^(e+1)) for e >= 1.
    UniSeries::Terms solved;
    for (int e = 1; e < target; ++e) {
        const UniSeries current(solved);
        const UniSeries value = series_substitute_y(F.truncated(e + 1), current);
        const Rat residual = value.coeff(e);
        if (residual != 0) {
            solved[e] = -residual / fy;
        }
    }
    return BranchJet(UniSeries(std::move(solved), target));
}

LocalCurve normalize_branch(const LocalCurve& c, const BranchJet& branch)
{
    const BiSeries shifted_y = BiSeries::y() + BiSeries::from_x(branch.g());
    LocalCurve out;
    out.series = compose(c.series, BiSeries::x(), shifted_y);
    out.label = c.label;
    out.misses_base_point = c.misses_base_point;
    return out;
}

BiSeries strict_transform(const BiSeries& f, std::int64_t m)
{
    BiSeries::Terms t;
    for (const auto& [mono, coeff] : f.terms()) {
        const std::int64_t px = static_cast<std::int64_t>(mono.x) + mono.y - m;
        if (px < 0) {
            throw std::invalid_argument("strict transform by more than the multiplicity");
        }
        t.emplace(Monomial{static_cast<int>(px), mono.y}, coeff);
    }
    return BiSeries(std::move(t), precision_sub(f.precision(), static_cast<int>(m)));
}

ClusterResult cluster_multiplicities(const LocalCurve& c, int n)
{
    if (n < 1) {
        throw std::invalid_argument("cluster length n must be >= 1");
    }
    ClusterResult out;
    BiSeries current = c.series;
    for (int i = 0; i < n; ++i) {
        const Valuation v = current.order();
        if (!v.determinate) {
            out.determinate = false;
            break;
        }
        if (v.value == 0) {
            // The strict transform misses Q_i, hence every later point.
            out.mults.resize(static_cast<std::size_t>(n), 0);
            break;
        }
        out.mults.push_back(v.value);
        out.total += v.value;
        current = strict_transform(current, v.value);
    }
    return out;
}

Valuation pullback_mult(const LocalCurve& c, int n)
{
    if (n < 1) {
        throw std::invalid_argument("covering degree n must be >= 1");
    }
    std::int64_t best = -1;
    for (const auto& [mono, coeff] : c.series.terms()) {
        const std::int64_t w = mono.x + static_cast<std::int64_t>(n) * mono.y;
        if (best < 0 || w < best) {
            best = w;
        }
    }
    // Unknown terms have p + q >= T, so p + n q >= T.
    const Precision T = c.series.precision();
    if (best >= 0 && (T == kExact || best < T)) {
        return Valuation::exactly(static_cast<int>(best));
    }
    return Valuation::at_least(T);
}

bool verify_prop51(const LocalCurve& c, int n)
{
    const ClusterResult cluster = cluster_multiplicities(c, n);
    if (!cluster.determinate) {
        throw PrecisionShortfall("cluster multiplicities not certified at precision " +
                                     std::to_string(c.series.precision()),
                                 c.series.precision(), 0);
    }
    const Valuation pm = pullback_mult(c, n);
    if (!pm.determinate) {
        throw PrecisionShortfall("pullback multiplicity not certified at precision " +
                                     std::to_string(c.series.precision()),
                                 c.series.precision(), 0);
    }
    return pm.value == cluster.total;
}

BatchVerdict verify_prop51_batch(std::span<const LocalCurve> curves, int n, Exec exec)
{
    if (n < 1) {
        throw std::invalid_argument("cluster length n must be >= 1");
    }
    const auto count = static_cast<std::int64_t>(curves.size());
    std::size_t failures = 0;
    std::size_t indeterminate = 0;
    auto check_one = [&](std::int64_t i, std::size_t& fail, std::size_t& unknown) {
        try {
            if (!verify_prop51(curves[static_cast<std::size_t>(i)], n)) {
                ++fail;
            }
        } catch (const PrecisionShortfall&) {
            ++unknown;
        }
    };
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            check_one(i, failures, indeterminate);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures, indeterminate)
        for (std::int64_t i = 0; i < count; ++i) {
            check_one(i, failures, indeterminate);
        }
    }
    return BatchVerdict{curves.size(), failures, indeterminate};
}

} // namespace seshadri
