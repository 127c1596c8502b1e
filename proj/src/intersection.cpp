#include "seshadri/intersection.hpp"

#include "seshadri/conditions.hpp"

namespace seshadri {

Valuation local_intersection(const IntersectionQuery& q)
{
    return ord_x(series_substitute_y(q.curve.series, q.branch.g()));
}

std::int64_t veronese_bound(std::int64_t j)
{
    return h0_plane(j);
}

} // namespace seshadri
