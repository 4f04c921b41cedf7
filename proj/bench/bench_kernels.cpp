// Times the OpenMP matrix kernels against the serial reference on random
// mod-p matrices, plus one end-to-end rank-profile run. Results are checked
// for agreement while timing.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stunted/kernels.hpp"
#include "stunted/matrix.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint32_t> random_matrix(std::size_t n, std::uint32_t p,
                                         std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    std::vector<std::uint32_t> a(n * n);
    for (auto& v : a)
        v = dist(rng);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint32_t p = 5;
    std::vector<std::size_t> sizes{128, 256, 512};
    if (argc > 1)
        sizes = {static_cast<std::size_t>(std::stoul(argv[1]))};

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif
    std::printf("%-8s %-10s %12s %12s %9s\n", "kernel", "size", "serial(s)", "parallel(s)",
                "speedup");

    std::mt19937 rng(12345);
    for (std::size_t n : sizes) {
        auto a = random_matrix(n, p, rng);
        auto b = random_matrix(n, p, rng);
        std::vector<std::uint32_t> c_serial(n * n), c_par(n * n);

        auto t0 = Clock::now();
        stunted::kernels::serial::mul_mod_p(a.data(), b.data(), c_serial.data(), n, n, n, p);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        stunted::kernels::mul_mod_p(a.data(), b.data(), c_par.data(), n, n, n, p);
        double tp = seconds_since(t0);
        if (c_serial != c_par) {
            std::printf("FAIL: mul kernels disagree at size %zu\n", n);
            return 1;
        }
        std::printf("%-8s %-10zu %12.4f %12.4f %8.2fx\n", "mul", n, ts, tp, ts / tp);

        auto w1 = a, w2 = a;
        t0 = Clock::now();
        std::size_t r1 = stunted::kernels::serial::rank_mod_p(w1.data(), n, n, p);
        ts = seconds_since(t0);
        t0 = Clock::now();
        std::size_t r2 = stunted::kernels::rank_mod_p(w2.data(), n, n, p);
        tp = seconds_since(t0);
        if (r1 != r2) {
            std::printf("FAIL: rank kernels disagree at size %zu\n", n);
            return 1;
        }
        std::printf("%-8s %-10zu %12.4f %12.4f %8.2fx\n", "rank", n, ts, tp, ts / tp);
    }

    // End-to-end: rank profile of a nilpotent operator at the largest size.
    std::size_t n = sizes.back();
    stunted::PrimeField f(p);
    stunted::FpMatrix m(f, n, n);
    for (std::size_t j = 1; j < n; ++j)
        if (j % p != 0)
            m(j - 1, j) = 1;
    auto t0 = Clock::now();
    auto profile = stunted::power_rank_profile(m, p);
    std::printf("%-8s %-10zu %12.4f  profile [", "profile", n, seconds_since(t0));
    for (std::size_t i = 0; i < profile.size(); ++i)
        std::printf("%s%zu", i ? ", " : "", profile[i]);
    std::printf("]\n");
    return 0;
}
