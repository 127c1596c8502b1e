#include "seshadri/covering.hpp"

#include <array>
#include <stdexcept>

namespace seshadri {

void CoveringSpec::validate() const
{
    if (n < 2) {
        throw std::invalid_argument("covering degree n must be >= 2");
    }
    if (l_squared < 1) {
        throw std::invalid_argument("L^2 must be >= 1");
    }
    if (b && *b < 1) {
        throw std::invalid_argument("b must be >= 1");
    }
}

std::optional<std::int64_t> CoveringSpec::branch_degree() const
{
    if (!b) {
        return std::nullopt;
    }
    return n * *b;
}

SeshadriBounds steffens_bounds(const CoveringSpec& spec, std::int64_t r)
{
    spec.validate();
    if (r < 1) {
        throw std::invalid_argument("number of points r must be >= 1");
    }
    const BigInt product = BigInt(r) * spec.n * spec.l_squared;
    SeshadriBounds out;
    out.lower = make_rat(isqrt_floor(product), r);
    // sqrt(n L^2) / sqrt(r) = sqrt(n L^2 r) / r
    out.upper = SurdValue(make_rat(1, r), product);
    out.maximal = surd_compare(SurdValue(out.lower), out.upper) == std::strong_ordering::equal;
    return out;
}

bool numeric_inequality_check(std::span<const std::int64_t> mults, std::size_t i0)
{
    if (i0 < 1 || i0 > mults.size()) {
        throw std::out_of_range("i0 must lie in 1..mults.size()");
    }
    BigInt total = 0;
    BigInt squares = 0;
    for (std::int64_t m : mults) {
        if (m < 0) {
            throw std::invalid_argument("multiplicities must be non-negative");
        }
        total += m;
        squares += BigInt(m) * m;
    }
    const BigInt r = static_cast<unsigned long>(mults.size());
    return r * (squares - mults[i0 - 1]) >= total * (total - 1);
}

SurdValue nagata_upper(const CoveringSpec& spec, std::int64_t r, const SurdValue& eps_L_nr)
{
    spec.validate();
    if (r < 1) {
        throw std::invalid_argument("number of points r must be >= 1");
    }
    return eps_L_nr * Rat(spec.n);
}

SurdValue nagata_conjectural(std::int64_t points)
{
    if (points < 9) {
        throw std::invalid_argument("the Nagata prediction is stated for >= 9 points; use the table of known constants");
    }
    return SurdValue::sqrt(make_rat(1, points));
}

namespace {

const std::array<KnownConstant, 9>& table()
{
    static const std::array<KnownConstant, 9> t{{
        {1, Rat(1), "line through the point"},
        {2, make_rat(1, 2), "line through both points"},
        {3, make_rat(1, 2), "line through two of the points"},
        {4, make_rat(1, 2), "line through two of the points"},
        {5, make_rat(2, 5), "conic through the five points"},
        {6, make_rat(2, 5), "conic through five of the points"},
        {7, make_rat(3, 8), "cubic double at one point through the other six"},
        {8, make_rat(6, 17), "sextic triple at one point, double at the other seven"},
        {9, make_rat(1, 3), "cubic through the nine points"},
    }};
    return t;
}

} // namespace

std::span<const KnownConstant> known_plane_constants()
{
    return table();
}

std::optional<Rat> known_plane_constant(int points)
{
    if (points < 1 || points > 9) {
        return std::nullopt;
    }
    return table()[static_cast<std::size_t>(points - 1)].value;
}

} // namespace seshadri
