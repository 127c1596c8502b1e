#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace seshadri::oracle {

namespace {

void trim(DensePoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

using PolyMatrix = std::vector<std::vector<DensePoly>>;

DensePoly determinant(const PolyMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    DensePoly acc;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].empty()) {
            continue;
        }
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<DensePoly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        DensePoly term = poly_mul(m[0][col], determinant(minor));
        acc = (col % 2 == 0) ? poly_add(acc, term) : poly_add(acc, poly_neg(term));
    }
    return acc;
}

} // namespace

DensePoly poly_mul(const DensePoly& a, const DensePoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    DensePoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b)
{
    DensePoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    trim(out);
    return out;
}

DensePoly poly_neg(const DensePoly& a)
{
    DensePoly out = a;
    for (auto& c : out) {
        c = -c;
    }
    return out;
}

int poly_order(const DensePoly& a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

DensePoly resultant_with_graph(const PolyInY& F_in, const DensePoly& g)
{
    PolyInY F = F_in;
    for (auto& c : F) {
        trim(c);
    }
    while (!F.empty() && F.back().empty()) {
        F.pop_back();
    }
    if (F.empty()) {
        return {};
    }
    const std::size_t deg = F.size() - 1;
    if (deg == 0) {
        // Res_y(F0(x), y - g) = F0(x).
        return F[0];
    }
    // Sylvester matrix of F (degree deg) and G = y - g (degree 1): size deg + 1.
    // One row of F's coefficients, deg rows of G's, highest power first.
    const std::size_t size = deg + 1;
    PolyMatrix s(size, std::vector<DensePoly>(size));
    for (std::size_t k = 0; k <= deg; ++k) {
        s[0][k] = F[deg - k];
    }
    const DensePoly minus_g = poly_neg(g);
    for (std::size_t r = 0; r < deg; ++r) {
        s[1 + r][r] = DensePoly{Rat(1)};
        s[1 + r][r + 1] = minus_g;
    }
    return determinant(s);
}

std::int64_t brute_condition_count(int n, std::int64_t m)
{
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = 0; i + j < m; ++j) {
            if (j % n == 0) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<std::int64_t> closed_form_cluster(const std::vector<std::pair<int, int>>& support, int n)
{
    auto accumulated = [&](int k) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (const auto& [p, q] : support) {
            best = std::min<std::int64_t>(best, p + static_cast<std::int64_t>(k) * q);
        }
        return best;
    };
    std::vector<std::int64_t> out;
    std::int64_t previous = 0;
    for (int k = 1; k <= n; ++k) {
        const std::int64_t now = accumulated(k);
        out.push_back(now - previous);
        previous = now;
    }
    return out;
}

} // namespace seshadri::oracle
