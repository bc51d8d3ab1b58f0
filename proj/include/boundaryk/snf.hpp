#pragma once

#include <cstdint>
#include <vector>

#include "boundaryk/intmatrix.hpp"

namespace boundaryk::intlin {

// Smith normal form with unimodular witnesses: u * a * v = s, where s is
// diagonal with d1 | d2 | ... | dr followed by zeros and det(u), det(v) are
// +1 or -1. invariant_factors lists exactly the nonzero diagonal entries.
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    std::vector<mpz_class> invariant_factors;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Rank over the rationals (fraction-free elimination); equals the number of
// nonzero invariant factors.
std::size_t rank_over_rationals(const IntMatrix& a);

// Rank of the reduction mod p, p prime. Throws NotPrime otherwise.
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);

// Trial-division primality check; the modulus must fit a machine word.
bool is_prime(std::uint64_t n);

// Inverse of a matrix whose invariant factors are all 1. Throws
// std::invalid_argument on anything else.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Serial reference kernels with the same contracts as above, written
// independently of the threaded ones. They back the differential tests and
// the serial lane of the benchmark tool.
namespace serial {
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
SnfResult smith_normal_form(const IntMatrix& a);
std::size_t rank_over_rationals(const IntMatrix& a);
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);
}  // namespace serial

}  // namespace boundaryk::intlin
