// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: emission position-sum curve and link-retry Monte Carlo.

#include "rydnet/emission.hpp"
#include "rydnet/link.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double timed(F&& f) {
    const double t0 = now_s();
    f();
    return now_s() - t0;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    using namespace rydnet;

    {
        const CloudGeometry g{10.0, 1.0};
        std::vector<double> grid;
        for (int i = 0; i < 96; ++i) {
            grid.push_back((std::numbers::pi / 2.0) * i / 95.0);
        }
        const int atoms = 40000;
        std::vector<double> serial_out, parallel_out;
        const double t_serial = timed([&] {
            serial_out = array_factor_numeric_curve_serial(g, grid, atoms, 99);
        });
        const double t_parallel = timed([&] {
            parallel_out = array_factor_numeric_curve(g, grid, atoms, 99);
        });
        bool identical = serial_out == parallel_out;
        std::printf("array-factor curve (%zu pts x %d atoms): serial %.3fs, openmp %.3fs, "
                    "speedup %.2fx, bit-identical: %s\n",
                    grid.size(), atoms, t_serial, t_parallel, t_serial / t_parallel,
                    identical ? "yes" : "NO");
    }

    {
        LinkParams p;
        p.distance_km = 5.0;
        const std::uint64_t trials = 20000000;
        LinkStats serial_stats, parallel_stats;
        const double t_serial =
            timed([&] { serial_stats = simulate_link_serial(p, trials, 7); });
        const double t_parallel = timed([&] { parallel_stats = simulate_link(p, trials, 7); });
        const bool identical =
            serial_stats.mc_success_frequency == parallel_stats.mc_success_frequency &&
            serial_stats.mc_mean_attempts == parallel_stats.mc_mean_attempts;
        std::printf("link monte carlo (%llu trials): serial %.3fs, openmp %.3fs, "
                    "speedup %.2fx, bit-identical: %s\n",
                    static_cast<unsigned long long>(trials), t_serial, t_parallel,
                    t_serial / t_parallel, identical ? "yes" : "NO");
    }
    return 0;
}
