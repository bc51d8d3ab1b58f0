#include "boundaryk/snf.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "boundaryk/errors.hpp"

namespace boundaryk::intlin {

namespace {

constexpr std::size_t kParallelCells = 1 << 12;

// Smallest |entry| != 0 in the trailing submatrix a[start.., start..].
// Returns false when that submatrix is identically zero.
bool find_min_pivot(const IntMatrix& d, std::size_t start, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = start; i < d.rows(); ++i) {
        for (std::size_t j = start; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            mpz_class v = abs(d(i, j));
            if (!found || v < best) {
                best = std::move(v);
                pr = i;
                pc = j;
                found = true;
            }
        }
    }
    return found;
}

bool pivot_is_lone(const IntMatrix& d, std::size_t i) {
    for (std::size_t j = i + 1; j < d.rows(); ++j)
        if (d(j, i) != 0) return false;
    for (std::size_t j = i + 1; j < d.cols(); ++j)
        if (d(i, j) != 0) return false;
    return true;
}

// First entry of the trailing submatrix not divisible by the pivot d(i,i).
bool find_indivisible(const IntMatrix& d, std::size_t i, std::size_t& jr, std::size_t& jc) {
    for (std::size_t r = i + 1; r < d.rows(); ++r)
        for (std::size_t c = i + 1; c < d.cols(); ++c)
            if (d(r, c) % d(i, i) != 0) {
                jr = r;
                jc = c;
                return true;
            }
    return false;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p, p prime. Wide accumulators keep the
    // arithmetic valid for moduli up to the full word.
    __int128 t = 0, nt = 1;
    __int128 r = p, nr = a % p;
    while (nr != 0) {
        const __int128 q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

SnfResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    const std::size_t steps = std::min(m, n);
    for (std::size_t i = 0; i < steps; ++i) {
        std::size_t pr = i, pc = i;
        if (!find_min_pivot(d, i, pr, pc)) break;  // trailing block already zero

        while (true) {
            d.swap_rows(i, pr);
            u.swap_rows(i, pr);
            d.swap_cols(i, pc);
            v.swap_cols(i, pc);

            const std::size_t sub = (m - i) * (n - i);

            // Clear the pivot column below; rows update independently.
            const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (sub >= kParallelCells)
            for (std::int64_t j = static_cast<std::int64_t>(i) + 1; j < mm; ++j) {
                if (d(j, i) == 0) continue;
                const mpz_class q = -mpz_class(d(j, i) / d(i, i));
                d.add_row_multiple(j, i, q);
                u.add_row_multiple(j, i, q);
            }

            // Clear the pivot row to the right; columns update independently.
            const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (sub >= kParallelCells)
            for (std::int64_t j = static_cast<std::int64_t>(i) + 1; j < nn; ++j) {
                if (d(i, j) == 0) continue;
                const mpz_class q = -mpz_class(d(i, j) / d(i, i));
                d.add_col_multiple(j, i, q);
                v.add_col_multiple(j, i, q);
            }

            if (pivot_is_lone(d, i)) {
                std::size_t jr = 0, jc = 0;
                if (!find_indivisible(d, i, jr, jc)) break;
                // Pull the offending row up so the next rounds drive the
                // pivot down to the gcd.
                d.add_row_multiple(i, jr, 1);
                u.add_row_multiple(i, jr, 1);
            }
            if (!find_min_pivot(d, i, pr, pc))
                throw std::logic_error("smith_normal_form: lost pivot");
        }

        if (d(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    SnfResult out;
    out.invariant_factors.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i)
        if (d(i, i) != 0) out.invariant_factors.push_back(d(i, i));
    out.s = std::move(d);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

std::size_t rank_over_rationals(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix b = a;
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t pr = rank;
        while (pr < m && b(pr, c) == 0) ++pr;
        if (pr == m) continue;
        b.swap_rows(rank, pr);

        const std::int64_t mm = static_cast<std::int64_t>(m);
        const std::size_t sub = (m - rank) * (n - c);
#pragma omp parallel for schedule(static) if (sub >= kParallelCells)
        for (std::int64_t j = static_cast<std::int64_t>(rank) + 1; j < mm; ++j) {
            for (std::size_t k = c + 1; k < n; ++k)
                b(j, k) = exact_quotient(b(rank, c) * b(j, k) - b(j, c) * b(rank, k), prev);
            b(j, c) = 0;
        }
        prev = b(rank, c);
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
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t pr = rank;
        while (pr < m && w[pr * n + c] == 0) ++pr;
        if (pr == m) continue;
        if (pr != rank)
            for (std::size_t k = 0; k < n; ++k) std::swap(w[rank * n + k], w[pr * n + k]);

        const std::uint64_t inv = mod_inverse(w[rank * n + c], p);
        const std::int64_t mm = static_cast<std::int64_t>(m);
        const std::size_t sub = (m - rank) * (n - c);
#pragma omp parallel for schedule(static) if (sub >= kParallelCells)
        for (std::int64_t j = static_cast<std::int64_t>(rank) + 1; j < mm; ++j) {
            const std::uint64_t f = mul_mod(w[j * n + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k)
                w[j * n + k] = sub_mod(w[j * n + k], mul_mod(f, w[rank * n + k], p), p);
        }
        ++rank;
    }
    return rank;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("unimodular_inverse: matrix not square");
    SnfResult f = smith_normal_form(m);
    if (f.invariant_factors.size() != m.rows())
        throw std::invalid_argument("unimodular_inverse: matrix is singular");
    for (const auto& d : f.invariant_factors)
        if (d != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    // u*m*v = I  =>  m^{-1} = v*u
    return mul(f.v, f.u);
}

}  // namespace boundaryk::intlin
