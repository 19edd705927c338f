// Compares the serial reference sweep drivers against the OpenMP paths and
// checks that both produce identical reports.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bw/sweep.hpp"

namespace {

double time_scan(const bw::ScanParams& params, bw::ScanReport& out) {
    auto start = std::chrono::steady_clock::now();
    out = bw::run_scan(params);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_outcomes(const bw::ScanReport& a, const bw::ScanReport& b) {
    if (a.outcomes.size() != b.outcomes.size()) return false;
    for (size_t i = 0; i < a.outcomes.size(); ++i) {
        const auto& x = a.outcomes[i];
        const auto& y = b.outcomes[i];
        if (!(x.block == y.block) || x.p != y.p || x.status != y.status ||
            x.partition != y.partition || x.p_divisible != y.p_divisible)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    int threads = 4;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    bw::ScanParams params;
    params.n_lo = 66;
    params.n_hi = 110;
    params.primes = {3, 5, 7, 11, 13};
    params.sym = true;
    params.alt = true;

    bw::ScanReport serial, parallel;
    params.jobs = 1;
    double t_serial = time_scan(params, serial);
    params.jobs = threads;
    double t_parallel = time_scan(params, parallel);

    std::cout << "scan n=66..110, p={3,5,7,11,13}, sym+alt ("
              << serial.outcomes.size() << " tuples)\n"
              << "  serial   " << t_serial << " s\n"
              << "  omp x" << threads << "   " << t_parallel << " s  (speedup "
              << t_serial / t_parallel << ")\n";

    if (!same_outcomes(serial, parallel)) {
        std::cout << "MISMATCH: parallel report differs from serial reference\n";
        return 1;
    }
    std::cout << "reports identical\n";

    bw::OracleParams op;
    op.n_max = 26;
    op.primes = {3, 5, 7, 11, 13};
    op.jobs = 1;
    auto o_serial = bw::run_oracle(op);
    op.jobs = threads;
    auto o_parallel = bw::run_oracle(op);
    std::cout << "oracle n<=26: serial " << o_serial.elapsed_sec << " s, omp x" << threads
              << " " << o_parallel.elapsed_sec << " s (speedup "
              << o_serial.elapsed_sec / o_parallel.elapsed_sec << ")\n";
    if (o_serial.mismatches != o_parallel.mismatches || o_serial.checked != o_parallel.checked) {
        std::cout << "MISMATCH: oracle reports differ\n";
        return 1;
    }
    return 0;
}
