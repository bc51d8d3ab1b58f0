#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace boundaryk::intlin {

// Dense integer matrix with arbitrary-precision entries, row-major.
// Matrices with zero rows and/or zero columns are valid and act as zero maps;
// every algorithm in this module follows the convention rank 0, factors [].
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), ent_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return ent_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return ent_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += c * row k
    void add_row_multiple(std::size_t i, std::size_t k, const mpz_class& c);
    // col j += c * col k
    void add_col_multiple(std::size_t j, std::size_t k, const mpz_class& c);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ent_ == b.ent_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> ent_;
};

IntMatrix transpose(const IntMatrix& a);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

// Exact determinant of a square matrix by fraction-free elimination.
mpz_class determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace boundaryk::intlin
