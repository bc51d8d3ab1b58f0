#include "boundaryk/intmatrix.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace boundaryk::intlin {

namespace {
// Inner loops switch to OpenMP above this many entry updates; below it the
// fork/join overhead dominates on the desk-scale matrices of the pipeline.
constexpr std::size_t kParallelCells = 1 << 12;
}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : ent_)
        if (e != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const mpz_class& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const mpz_class& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimensions disagree");
    IntMatrix c(a.rows(), b.cols());
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::size_t work = a.rows() * a.cols() * b.cols();
#pragma omp parallel for schedule(static) if (work >= kParallelCells)
    for (std::int64_t i = 0; i < m; ++i) {
        mpz_class acc;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

mpz_class determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Bareiss: entries stay determinants of leading submatrices, divisions exact.
    IntMatrix b = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        if (b(k, k) == 0) {
            std::size_t pr = k + 1;
            while (pr < n && b(pr, k) == 0) ++pr;
            if (pr == n) return 0;
            b.swap_rows(k, pr);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = b(k, k) * b(i, j) - b(i, k) * b(k, j);
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("determinant: inexact division");
                b(i, j) = std::move(q);
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return sign > 0 ? b(n - 1, n - 1) : mpz_class(-b(n - 1, n - 1));
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < a.cols(); ++j) {
            os << a(i, j).get_str();
            if (j + 1 < a.cols()) os << ", ";
        }
        os << "]";
        if (i + 1 < a.rows()) os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace boundaryk::intlin
