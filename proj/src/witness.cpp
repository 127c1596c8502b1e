#include "seshadri/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "seshadri/errors.hpp"
#include "seshadri/intersection.hpp"

namespace seshadri {

std::vector<Monomial> plane_monomials(int degree)
{
    std::vector<Monomial> out;
    for (int d = 0; d <= degree; ++d) {
        for (int p = d; p >= 0; --p) {
            out.push_back({p, d - p});
        }
    }
    return out;
}

namespace {

void validate(const WitnessProblem& p)
{
    if (p.degree < 1) {
        throw std::invalid_argument("witness degree j must be >= 1");
    }
    if (p.mult < 0 || p.target < 0) {
        throw std::invalid_argument("multiplicity and target must be >= 0");
    }
    if (p.branch.precision() < p.target) {
        throw PrecisionShortfall("branch known to order " + std::to_string(p.branch.precision()) +
                                     " but the target intersection order is " + std::to_string(p.target),
                                 p.branch.precision(), p.target);
    }
}

} // namespace

RatMatrix witness_system(const WitnessProblem& p)
{
    validate(p);
    const std::vector<Monomial> monos = plane_monomials(p.degree);
    RatMatrix system(0, monos.size());

    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (monos[i].degree() < p.mult) {
            RatVector row(monos.size());
            row[i] = 1;
            system.append_row(row);
        }
    }

    // x^p g(x)^q modulo x^target for every unknown.
    const UniSeries g = p.branch.g().truncated(p.target);
    std::vector<UniSeries> gpow{UniSeries(UniSeries::Terms{{0, Rat(1)}}, p.target)};
    for (int q = 1; q <= p.degree; ++q) {
        gpow.push_back(gpow.back() * g);
    }
    std::vector<UniSeries> images;
    images.reserve(monos.size());
    for (const Monomial& m : monos) {
        images.push_back(UniSeries::monomial(1, m.x, p.target) * gpow[static_cast<std::size_t>(m.y)]);
    }
    for (int e = 0; e < p.target; ++e) {
        RatVector row(monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            row[i] = images[i].coeff(e);
        }
        system.append_row(row);
    }
    return system;
}

WitnessVerdict solve_witness(const WitnessProblem& p)
{
    const RatMatrix system = witness_system(p);
    const std::vector<Monomial> monos = plane_monomials(p.degree);
    const KernelResult kernel = kernel_dimension(system);

    WitnessVerdict out;
    out.unknowns = monos.size();
    out.intersection_conditions = static_cast<std::size_t>(p.target);
    out.multiplicity_conditions = system.rows() - out.intersection_conditions;
    out.rank = kernel.rank;
    out.kernel_dim = kernel.dimension;
    out.exists = kernel.dimension > 0;

    for (RatVector v : kernel.basis) {
        // Scale so the first nonzero coefficient in column order is 1.
        const auto lead = std::find_if(v.begin(), v.end(), [](const Rat& c) { return c != 0; });
        if (lead != v.end()) {
            const Rat inv = 1 / *lead;
            for (Rat& c : v) {
                c *= inv;
            }
        }
        BiSeries::Terms terms;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (v[i] != 0) {
                terms.emplace(monos[i], v[i]);
            }
        }
        BiSeries curve(std::move(terms));
        const Valuation mult = curve.order();
        const Valuation contact = local_intersection({LocalCurve(curve, {}, p.mult == 0), p.branch});
        // An indeterminate contact is bounded below by the substitution
        // precision, which is >= target here.
        if (mult.value < p.mult || contact.value < p.target) {
            throw std::logic_error("kernel vector " + curve.to_string() + " fails re-verification");
        }
        out.basis.push_back(std::move(curve));
    }
    return out;
}

BranchJet n8_branch(std::int64_t b)
{
    if (b < 1) {
        throw std::invalid_argument("b must be >= 1");
    }
    const std::int64_t top = 8 * b;
    if (top > kExact / 2) {
        throw std::invalid_argument("b too large");
    }
    UniSeries::Terms t;
    t[static_cast<int>(top)] += 1;
    t[4] += 1;
    t[2] += 1;
    return BranchJet(UniSeries(std::move(t)));
}

WitnessVerdict n8_certificate(std::int64_t b)
{
    return solve_witness(WitnessProblem{n8_branch(b), 3, 2, 9});
}

ProbeReport genericity_probe(std::size_t trials, std::uint64_t seed, int coeff_bound, Exec exec)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::vector<BranchJet> branches;
    branches.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        UniSeries::Terms t{{2, Rat(1)}};
        for (int e = 3; e <= 8; ++e) {
            t[e] = coeff(rng);
        }
        branches.emplace_back(UniSeries(std::move(t)));
    }

    const auto count = static_cast<std::int64_t>(trials);
    std::size_t exists = 0;
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            exists += solve_witness({branches[static_cast<std::size_t>(i)], 3, 2, 9}).exists ? 1 : 0;
        }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : exists)
        for (std::int64_t i = 0; i < count; ++i) {
            exists += solve_witness({branches[static_cast<std::size_t>(i)], 3, 2, 9}).exists ? 1 : 0;
        }
    }
    return ProbeReport{trials, exists};
}

} // namespace seshadri
