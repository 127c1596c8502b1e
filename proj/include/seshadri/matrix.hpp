#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Appends one row; its length must equal cols().
    void append_row(std::span<const Rat> values);

    RatVector apply(std::span<const Rat> v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct KernelResult
{
    std::size_t rank = 0;
    std::size_t dimension = 0;
    /// One vector per free column of the reduced row echelon form.
    std::vector<RatVector> basis;
};

/// Reduced row echelon form by exact rational Gaussian elimination.
/// `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);

/// Rank, nullity and an exact kernel basis (m * v == 0 for every v).
KernelResult kernel_dimension(const RatMatrix& m);

} // namespace seshadri
