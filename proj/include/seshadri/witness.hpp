#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seshadri/cluster.hpp"
#include "seshadri/exec.hpp"
#include "seshadri/matrix.hpp"
#include "seshadri/series.hpp"

namespace seshadri {

/// Plane curves of degree <= degree with multiplicity >= mult at the origin
/// and intersection order >= target with the branch jet there.
struct WitnessProblem
{
    BranchJet branch;
    int degree = 1;
    int mult = 0;
    int target = 0;
};

struct WitnessVerdict
{
    bool exists = false;
    std::size_t kernel_dim = 0;
    /// Kernel basis as polynomials in x, y.
    std::vector<BiSeries> basis;

    std::size_t unknowns = 0;              // h0_plane(degree)
    std::size_t multiplicity_conditions = 0;
    std::size_t intersection_conditions = 0;
    std::size_t rank = 0;
};

/// Monomials x^p y^q with p + q <= degree, in the column order of the system:
/// by total degree, then decreasing power of x.
std::vector<Monomial> plane_monomials(int degree);

/// The linear system of a witness problem: one row a_pq = 0 per monomial of
/// degree < mult, then one row per x^e, e < target, of sum a_pq x^p g^q.
RatMatrix witness_system(const WitnessProblem& p);

/// Exact kernel of witness_system; every basis curve is re-checked against
/// local_intersection and its multiplicity. Throws PrecisionShortfall when the
/// branch precision is below target.
WitnessVerdict solve_witness(const WitnessProblem& p);

/// Branch y = x^(8b) + x^4 + x^2.
BranchJet n8_branch(std::int64_t b);

/// solve_witness for cubics with a double point meeting n8_branch(b) to order 9.
WitnessVerdict n8_certificate(std::int64_t b);

struct ProbeReport
{
    std::size_t trials = 0;
    /// Branches for which a witness curve exists.
    std::size_t exists_count = 0;

    friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

/// `trials` random branches g = x^2 + c_3 x^3 + ... + c_8 x^8, c_i uniform
/// in [-coeff_bound, coeff_bound], each run through the (j=3, mu=2, t=9)
/// problem. Branches are drawn serially from `seed`, so the policy does not
/// change the report.
ProbeReport genericity_probe(std::size_t trials, std::uint64_t seed, int coeff_bound = 9,
                             Exec exec = Exec::Parallel);

} // namespace seshadri
