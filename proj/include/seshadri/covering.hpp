#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seshadri/rational.hpp"
#include "seshadri/surd.hpp"

namespace seshadri {

/// An n-cyclic covering X -> Y branched along a smooth divisor B.
///
/// L is the ample generator of NS(Y) with L^2 = l_squared. For Y = P^2
/// (l_squared = 1) the branch divisor is B ~ n*b*L and M = b*L.
struct CoveringSpec
{
    int n = 2;
    std::int64_t l_squared = 1;
    std::optional<std::int64_t> b;

    /// Throws std::invalid_argument unless n >= 2, l_squared >= 1 and b >= 1 when present.
    void validate() const;

    /// (pi^*L)^2 = n * L^2.
    std::int64_t pullback_l_squared() const { return n * l_squared; }
    /// Degree of the branch curve when Y = P^2.
    std::optional<std::int64_t> branch_degree() const;
};

struct SeshadriBounds
{
    Rat lower;
    SurdValue upper;
    bool maximal = false;
};

/// floor(sqrt(r * n * L^2)) / r <= eps(pi^*L; P_1..P_r) <= sqrt(n * L^2) / sqrt(r)
/// at r very general points; the two agree exactly when r*n*L^2 is a square.
/// Throws std::invalid_argument for r < 1.
SeshadriBounds steffens_bounds(const CoveringSpec& spec, std::int64_t r);

/// Evaluates r * (sum m_i^2 - m_{i0}) >= M * (M - 1), M = sum m_i, r = mults.size().
/// i0 is 1-based. This is a lemma, so the answer is always true; the function is
/// the executable check used by the property suite.
bool numeric_inequality_check(std::span<const std::int64_t> mults, std::size_t i0);

/// n * eps_L_nr: upper bound on eps(pi^*L; P_1..P_r) at r points of the
/// branch divisor, from the Seshadri constant of L at n*r very general points.
SurdValue nagata_upper(const CoveringSpec& spec, std::int64_t r, const SurdValue& eps_L_nr);

/// 1/sqrt(points), the value predicted by the Nagata conjecture. Requires points >= 9.
SurdValue nagata_conjectural(std::int64_t points);

struct KnownConstant
{
    int points = 0;
    Rat value;
    /// The curve computing the constant.
    std::string source;
};

/// Multi-point Seshadri constants of O_{P^2}(1) at 1..9 general points:
/// 1, 1/2, 1/2, 1/2, 2/5, 2/5, 3/8, 6/17, 1/3. Reference data only.
std::span<const KnownConstant> known_plane_constants();

/// Table lookup for 1 <= points <= 9.
std::optional<Rat> known_plane_constant(int points);

} // namespace seshadri
