#include "seshadri/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace seshadri {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

void RatMatrix::append_row(std::span<const Rat> values)
{
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    }
    if (values.size() != cols_) {
        throw std::invalid_argument("row length does not match column count");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

RatVector RatMatrix::apply(std::span<const Rat> v) const
{
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match column count");
    }
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] != 0) {
                acc += (*this)(r, c) * v[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots)
{
    RatMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
        std::size_t found = lead_row;
        while (found < a.rows() && a(found, c) == 0) {
            ++found;
        }
        if (found == a.rows()) {
            continue;
        }
        if (found != lead_row) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                std::swap(a(found, k), a(lead_row, k));
            }
        }
        const Rat inv = 1 / a(lead_row, c);
        for (std::size_t k = c; k < a.cols(); ++k) {
            a(lead_row, k) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || a(r, c) == 0) {
                continue;
            }
            const Rat factor = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k) {
                a(r, k) -= factor * a(lead_row, k);
            }
        }
        piv.push_back(c);
        ++lead_row;
    }
    if (pivots != nullptr) {
        *pivots = std::move(piv);
    }
    return a;
}

std::size_t rank(const RatMatrix& m)
{
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

KernelResult kernel_dimension(const RatMatrix& m)
{
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(m, &piv);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : piv) {
        is_pivot[c] = true;
    }

    KernelResult out;
    out.rank = piv.size();
    out.dimension = m.cols() - out.rank;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            v[piv[i]] = -r(i, free);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

} // namespace seshadri
