#include "seshadri/conditions.hpp"

#include <stdexcept>
#include <string>

namespace seshadri {

namespace {

void require_degree(int n)
{
    if (n < 2) {
        throw std::invalid_argument("covering degree n must be >= 2");
    }
}

} // namespace

MultDecomp MultDecomp::of(int n, std::int64_t m)
{
    require_degree(n);
    if (m < 0) {
        throw std::invalid_argument("multiplicity must be >= 0");
    }
    return MultDecomp{m, m / n, m % n, n};
}

std::int64_t condition_count(int n, std::int64_t m)
{
    const MultDecomp md = MultDecomp::of(n, m);
    const Rat count = Rat(md.k + 1) * (make_rat(BigInt(n) * md.k, 2) + Rat(md.r));
    if (!is_integer(count)) {
        throw std::logic_error("non-integral condition count " + to_string(count));
    }
    return to_int64(count);
}

std::int64_t h0_plane(std::int64_t d)
{
    if (d < 0) {
        throw std::invalid_argument("degree must be >= 0");
    }
    return (d + 2) * (d + 1) / 2;
}

std::optional<Candidate> candidate_search(int n, std::int64_t d_max)
{
    require_degree(n);
    if (d_max < 1) {
        throw std::invalid_argument("d_max must be >= 1");
    }
    for (std::int64_t d = 1; d <= d_max; ++d) {
        const std::int64_t m = to_int64(isqrt_ceil(BigInt(d) * d * n));
        const std::int64_t h0 = h0_plane(d);
        const std::int64_t conditions = condition_count(n, m);
        if (h0 > conditions) {
            return Candidate{n, d, m, h0, conditions, make_rat(BigInt(n) * d, m)};
        }
    }
    return std::nullopt;
}

bool feasibility_bound(int n)
{
    require_degree(n);
    return n <= 9;
}

std::vector<DiscardCase> discard_search(int n)
{
    if (n < 2 || n > 9) {
        throw std::invalid_argument("discard_search needs 2 <= n <= 9");
    }
    const auto top = candidate_search(n, 10);
    if (!top) {
        throw std::logic_error("no invariant divisor for n = " + std::to_string(n));
    }
    std::vector<DiscardCase> out;
    for (std::int64_t j = 1; j <= top->d; ++j) {
        const std::int64_t self = n * j * j;
        // m^2 >= self >= m(m-1) leaves m in [ceil(sqrt(self)), floor(sqrt(self)) + 1].
        const std::int64_t lo = to_int64(isqrt_ceil(self));
        const std::int64_t hi = to_int64(isqrt_floor(self)) + 1;
        for (std::int64_t m = lo; m <= hi; ++m) {
            if (m * m >= self && self >= m * (m - 1) && m < h0_plane(j)) {
                out.push_back({j, m});
            }
        }
    }
    return out;
}

std::vector<std::optional<Candidate>> candidate_sweep(int n_lo, int n_hi, std::int64_t d_max, Exec exec)
{
    require_degree(n_lo);
    if (d_max < 1) {
        throw std::invalid_argument("d_max must be >= 1");
    }
    if (n_hi < n_lo) {
        return {};
    }
    const int count = n_hi - n_lo + 1;
    std::vector<std::optional<Candidate>> out(static_cast<std::size_t>(count));
    if (exec == Exec::Serial) {
        for (int i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(i)] = candidate_search(n_lo + i, d_max);
        }
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = candidate_search(n_lo + i, d_max);
    }
    return out;
}

std::vector<TableRow> theorem_table(std::int64_t d_max, Exec exec)
{
    const auto found = candidate_sweep(2, 9, d_max, exec);
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < found.size(); ++i) {
        const int n = static_cast<int>(i) + 2;
        if (!found[i]) {
            throw std::runtime_error("no invariant divisor for n = " + std::to_string(n) + " with d <= " +
                                     std::to_string(d_max));
        }
        rows.push_back({n, *found[i]});
    }
    return rows;
}

} // namespace seshadri
