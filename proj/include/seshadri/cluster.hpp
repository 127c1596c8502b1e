#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seshadri/exec.hpp"
#include "seshadri/series.hpp"

namespace seshadri {

/// Local equation of a plane curve at the base point Q (the origin).
struct LocalCurve
{
    BiSeries series;
    std::string label;
    /// Set to allow a nonzero constant term (a curve missing Q).
    bool misses_base_point = false;

    LocalCurve() = default;
    LocalCurve(BiSeries s, std::string name = {}, bool misses = false);
};

/// Smooth branch curve y = g(x) through the origin.
class BranchJet
{
public:
    BranchJet() = default;
    /// Throws std::invalid_argument if g(0) != 0.
    explicit BranchJet(UniSeries g);

    /// Solves F(x, g(x)) = 0 by undetermined coefficients up to x^precision.
    /// Needs F(0,0) = 0 and dF/dy(0,0) != 0; throws std::invalid_argument otherwise.
    static BranchJet from_implicit(const BiSeries& F, Precision precision);

    const UniSeries& g() const { return g_; }
    Precision precision() const { return g_.precision(); }

private:
    UniSeries g_;
};

struct ClusterResult
{
    /// m_1, m_2, ... at Q_1, Q_2, ...; when not determinate only the
    /// certified prefix is present.
    std::vector<std::int64_t> mults;
    std::int64_t total = 0;
    bool determinate = true;
};

/// Rewrites c in coordinates (x, y~) with y~ = y - g(x), so the branch becomes y~ = 0.
/// A truncated branch lowers the precision of the result.
LocalCurve normalize_branch(const LocalCurve& c, const BranchJet& branch);

/// One blow-up of a curve at the origin in the chart x = x1, y = x1*y1,
/// divided by x1^m (the strict transform for m = multiplicity).
BiSeries strict_transform(const BiSeries& f, std::int64_t m);

/// Multiplicities of c along the cluster Q_1..Q_n of infinitely near points
/// on the branch y = 0. c must already be branch-normalized.
ClusterResult cluster_multiplicities(const LocalCurve& c, int n);

/// min{p + n*q : a_pq != 0}, the multiplicity of pi^*C at the ramification
/// point over Q; "at least precision" when it cannot be certified.
Valuation pullback_mult(const LocalCurve& c, int n);

/// pullback_mult(c, n) == sum of the cluster multiplicities.
/// Throws PrecisionShortfall if either side is not certified.
bool verify_prop51(const LocalCurve& c, int n);

struct BatchVerdict
{
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::size_t indeterminate = 0;

    friend bool operator==(const BatchVerdict&, const BatchVerdict&) = default;
};

/// verify_prop51 over many curves.
BatchVerdict verify_prop51_batch(std::span<const LocalCurve> curves, int n, Exec exec = Exec::Parallel);

} // namespace seshadri
