#include "seifert/smith_normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace seifert {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

namespace {

struct Worker {
    IntMatrix a;
    IntMatrix u;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    }
    // row_j -= f * row_i
    void sub_row(std::size_t j, std::size_t i, const Integer& f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(j, c) -= f * a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(j, c) -= f * u(i, c);
    }
    // col_j -= f * col_i
    void sub_col(std::size_t j, std::size_t i, const Integer& f) {
        if (f == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) -= f * a(r, i);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    Worker w{input, IntMatrix::identity(input.rows())};
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (w.a(r, c) == 0) continue;
                    Integer v = abs(w.a(r, c));
                    if (!found || v < best) {
                        best = v;
                        pr = r;
                        pc = c;
                        found = true;
                    }
                }
            }
            if (!found) break;
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                w.sub_row(r, t, w.a(r, t) / w.a(t, t));
                if (w.a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                w.sub_col(c, t, w.a(t, c) / w.a(t, t));
                if (w.a(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (w.a(r, c) % w.a(t, t) != 0) {
                        w.sub_row(t, r, Integer(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (w.a(t, t) < 0) w.negate_row(t);
    }

    SmithForm out;
    out.diagonal.assign(rows, Integer(0));
    for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = w.a(i, i);
    out.row_transform = std::move(w.u);
    return out;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace seifert
