#include <cstdint>
#include <stdexcept>

#include "boundaryk/errors.hpp"
#include "boundaryk/snf.hpp"

// Reference kernels: straightforward textbook versions, single-threaded.
// smith_normal_form here reduces with Euclidean swap steps at the pivot
// instead of global minimum pivoting, so the two implementations share no
// structure beyond the result contract.

namespace boundaryk::intlin::serial {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimensions disagree");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

namespace {

bool move_any_nonzero_to_pivot(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t i) {
    for (std::size_t r = i; r < d.rows(); ++r)
        for (std::size_t c = i; c < d.cols(); ++c)
            if (d(r, c) != 0) {
                d.swap_rows(i, r);
                u.swap_rows(i, r);
                d.swap_cols(i, c);
                v.swap_cols(i, c);
                return true;
            }
    return false;
}

bool cleared(const IntMatrix& d, std::size_t i) {
    for (std::size_t r = i + 1; r < d.rows(); ++r)
        if (d(r, i) != 0) return false;
    for (std::size_t c = i + 1; c < d.cols(); ++c)
        if (d(i, c) != 0) return false;
    return true;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t i = 0; i < steps; ++i) {
        if (!move_any_nonzero_to_pivot(d, u, v, i)) break;
        while (true) {
            // Euclid down the column.
            for (std::size_t j = i + 1; j < d.rows(); ++j) {
                while (d(j, i) != 0) {
                    const mpz_class q = -mpz_class(d(j, i) / d(i, i));
                    d.add_row_multiple(j, i, q);
                    u.add_row_multiple(j, i, q);
                    if (d(j, i) != 0) {
                        d.swap_rows(i, j);
                        u.swap_rows(i, j);
                    }
                }
            }
            // Euclid along the row; column swaps can refill the column,
            // hence the outer loop.
            for (std::size_t j = i + 1; j < d.cols(); ++j) {
                while (d(i, j) != 0) {
                    const mpz_class q = -mpz_class(d(i, j) / d(i, i));
                    d.add_col_multiple(j, i, q);
                    v.add_col_multiple(j, i, q);
                    if (d(i, j) != 0) {
                        d.swap_cols(i, j);
                        v.swap_cols(i, j);
                    }
                }
            }
            if (!cleared(d, i)) continue;

            bool fixed = true;
            for (std::size_t r = i + 1; r < d.rows() && fixed; ++r)
                for (std::size_t c = i + 1; c < d.cols() && fixed; ++c)
                    if (d(r, c) % d(i, i) != 0) {
                        d.add_row_multiple(i, r, 1);
                        u.add_row_multiple(i, r, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    SnfResult out;
    for (std::size_t i = 0; i < steps; ++i)
        if (d(i, i) != 0) out.invariant_factors.push_back(d(i, i));
    out.s = d;
    out.u = u;
    out.v = v;
    return out;
}

std::size_t rank_over_rationals(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<mpq_class> w(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a(i, j);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t pr = rank;
        while (pr < m && w[pr * n + c] == 0) ++pr;
        if (pr == m) continue;
        for (std::size_t k = 0; k < n; ++k) std::swap(w[rank * n + k], w[pr * n + k]);
        for (std::size_t j = rank + 1; j < m; ++j) {
            if (w[j * n + c] == 0) continue;
            const mpq_class f = w[j * n + c] / w[rank * n + c];
            for (std::size_t k = c; k < n; ++k) w[j * n + k] -= f * w[rank * n + k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::uint64_t> w(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);

    auto mulp = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };

    // Cross-multiplication form: row_j <- pivot*row_j - w(j,c)*row_pivot.
    // Scaling by a nonzero residue leaves the rank alone.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t pr = rank;
        while (pr < m && w[pr * n + c] == 0) ++pr;
        if (pr == m) continue;
        for (std::size_t k = 0; k < n; ++k) std::swap(w[rank * n + k], w[pr * n + k]);
        const std::uint64_t piv = w[rank * n + c];
        for (std::size_t j = rank + 1; j < m; ++j) {
            const std::uint64_t f = w[j * n + c];
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) {
                const std::uint64_t lhs = mulp(piv, w[j * n + k]);
                const std::uint64_t rhs = mulp(f, w[rank * n + k]);
                w[j * n + k] = lhs >= rhs ? lhs - rhs : lhs + (p - rhs);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace boundaryk::intlin::serial
