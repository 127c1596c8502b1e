#pragma once

#include <cstdint>

#include "seshadri/cluster.hpp"
#include "seshadri/series.hpp"

namespace seshadri {

/// A curve and a smooth branch jet centred at the same point.
struct IntersectionQuery
{
    LocalCurve curve;
    BranchJet branch;
};

/// I_Q(C, B) = ord_x C(x, g(x)); "at least precision" when C contains the
/// branch jet to the known order.
Valuation local_intersection(const IntersectionQuery& q);

/// h^0(O_{P^2}(j)). A curve C ~ j*pi^*L through a generic ramification
/// point has multiplicity strictly below this.
std::int64_t veronese_bound(std::int64_t j);

} // namespace seshadri
