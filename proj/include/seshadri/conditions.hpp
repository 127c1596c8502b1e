#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seshadri/exec.hpp"
#include "seshadri/rational.hpp"

namespace seshadri {

/// m = n*k + r with 0 <= r < n.
struct MultDecomp
{
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::int64_t r = 0;
    int n = 2;

    static MultDecomp of(int n, std::int64_t m);
};

/// Number of linear conditions for a sigma-invariant section of pi^*L to
/// vanish to order m at a ramification point: (k+1)(nk/2 + r).
std::int64_t condition_count(int n, std::int64_t m);

/// h^0(O_{P^2}(d)) = (d+2)(d+1)/2.
std::int64_t h0_plane(std::int64_t d);

/// An invariant divisor D ~ d*pi^*L with multiplicity m at a ramification
/// point, existing because h0 > conditions.
struct Candidate
{
    int n = 0;
    std::int64_t d = 0;
    std::int64_t m = 0;
    std::int64_t h0 = 0;
    std::int64_t conditions = 0;
    /// n*d/m, the Seshadri ratio (D . pi^*L) / mult.
    Rat epsilon;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Smallest d in 1..d_max (with m = ceil(d*sqrt(n)), the least m satisfying
/// d^2 n <= m^2) for which h0_plane(d) > condition_count(n, m).
std::optional<Candidate> candidate_search(int n, std::int64_t d_max);

/// 9 d^2 >= m^2 >= n d^2 forces n <= 9: whether an invariant exceptional
/// divisor can come out of the dimension count at all.
bool feasibility_bound(int n);

struct DiscardCase
{
    std::int64_t j = 0;
    std::int64_t m = 0;

    friend bool operator==(const DiscardCase&, const DiscardCase&) = default;
};

/// Pairs (j, m), 1 <= j <= d, with m^2 >= n j^2 >= m(m-1) and m < h0_plane(j)
/// that numerics alone cannot exclude. d comes from candidate_search(n, 10).
/// Requires 2 <= n <= 9.
std::vector<DiscardCase> discard_search(int n);

struct TableRow
{
    int n = 0;
    Candidate candidate;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// candidate_search for n = 2..9. Throws std::runtime_error if some n has no
/// candidate below d_max.
std::vector<TableRow> theorem_table(std::int64_t d_max = 10, Exec exec = Exec::Parallel);

/// candidate_search for every n in [n_lo, n_hi]; entry i is for n_lo + i.
std::vector<std::optional<Candidate>> candidate_sweep(int n_lo, int n_hi, std::int64_t d_max,
                                                      Exec exec = Exec::Parallel);

} // namespace seshadri
