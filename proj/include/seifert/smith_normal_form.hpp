#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
/// d_i >= 0. Only U is kept: the cokernel of A maps isomorphically onto
/// the cokernel of D via x -> U x.
struct SmithForm {
    std::vector<Integer> diagonal;  // length rows(A); zero past the rank
    IntMatrix row_transform;        // U
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

}  // namespace seifert
