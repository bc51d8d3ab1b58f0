// Benchmark comparing the serial reference kernels against the OpenMP
// ones on random integer matrices. The pipeline's fixtures are far below
// the parallel threshold; this target exists to keep the two lanes honest
// on inputs where threading matters.

#include <omp.h>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

#include "boundaryk/snf.hpp"

using namespace boundaryk::intlin;
using clock_type = std::chrono::steady_clock;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int span, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-span, span);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

template <typename F>
double time_ms(F&& f, int trials) {
    double best = 1e300;
    for (int t = 0; t < trials; ++t) {
        const auto start = clock_type::now();
        f();
        const std::chrono::duration<double, std::milli> elapsed = clock_type::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-22s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    // The reference lanes grow coefficients much faster than the production
    // kernels (mpq elimination; Euclid-swap reduction without minimum
    // pivoting), so they get their own smaller default sizes.
    std::size_t n = 160;
    std::size_t rational_n = 64;
    std::size_t snf_n = 36;
    int trials = 3;
    app.add_option("-n,--size", n, "matrix size for the mul and rank_mod_p kernels");
    app.add_option("-r,--rational-size", rational_n,
                   "matrix size for rank_over_rationals (the mpq reference grows fast)");
    app.add_option("-s,--snf-size", snf_n, "matrix size for the smith normal form kernel");
    app.add_option("-t,--trials", trials, "trials per kernel (best time reported)");
    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("BOUNDARYK_THREADS")) {
        const long threads = std::strtol(env, nullptr, 10);
        if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
    }

    std::mt19937 rng(20240001);
    const IntMatrix a = random_matrix(n, n, 9, rng);
    const IntMatrix b = random_matrix(n, n, 9, rng);
    const IntMatrix r = random_matrix(rational_n, rational_n, 9, rng);
    const IntMatrix s = random_matrix(snf_n, snf_n, 4, rng);
    constexpr std::uint64_t p = 1000003;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        IntMatrix r1, r2;
        const double t1 = time_ms([&] { r1 = serial::mul(a, b); }, trials);
        const double t2 = time_ms([&] { r2 = mul(a, b); }, trials);
        report("mul", t1, t2, r1 == r2);
    }
    {
        std::size_t r1 = 0, r2 = 0;
        const double t1 = time_ms([&] { r1 = serial::rank_mod_p(a, p); }, trials);
        const double t2 = time_ms([&] { r2 = rank_mod_p(a, p); }, trials);
        report("rank_mod_p", t1, t2, r1 == r2);
    }
    {
        std::size_t r1 = 0, r2 = 0;
        const double t1 = time_ms([&] { r1 = serial::rank_over_rationals(r); }, trials);
        const double t2 = time_ms([&] { r2 = rank_over_rationals(r); }, trials);
        report("rank_over_rationals", t1, t2, r1 == r2);
    }
    {
        SnfResult r1, r2;
        const double t1 = time_ms([&] { r1 = serial::smith_normal_form(s); }, trials);
        const double t2 = time_ms([&] { r2 = smith_normal_form(s); }, trials);
        report("smith_normal_form", t1, t2,
               r1.invariant_factors == r2.invariant_factors && r1.s == r2.s);
    }
    return 0;
}
