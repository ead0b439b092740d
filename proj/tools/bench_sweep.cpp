/*
 * Compares the serial reference sweep against the OpenMP kernel: same rows,
 * wall time for each, and a check that the reports are byte-identical.
 */
#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prymbn/sweep.hpp"

namespace {

double run_ms(prymbn::ExecutionPolicy policy, int max_weight, std::string& digest) {
    prymbn::SweepOptions opts;
    opts.policy = policy;
    opts.bound = std::max(prymbn::kDefaultEnumerationBound, max_weight);
    auto start = std::chrono::steady_clock::now();
    prymbn::VerificationReport report = prymbn::verify_identities(max_weight, opts);
    auto stop = std::chrono::steady_clock::now();
    digest = report.to_json().dump();
    if (!report.all_ok()) {
        std::cerr << "FATAL: identities failed during benchmark\n";
        std::exit(1);
    }
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_weight = 14;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--max-weight" && i + 1 < argc) {
            max_weight = std::stoi(argv[++i]);
        } else if (arg == "--reps" && i + 1 < argc) {
            reps = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: bench_sweep [--max-weight W] [--reps R]\n";
            return 2;
        }
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "weight  serial_ms  parallel_ms  speedup  identical\n";

    bool all_identical = true;
    for (int w = 6; w <= max_weight; w += 2) {
        double best_serial = 1e300, best_parallel = 1e300;
        std::string serial_digest, parallel_digest;
        for (int rep = 0; rep < reps; ++rep) {
            best_serial = std::min(best_serial,
                                   run_ms(prymbn::ExecutionPolicy::serial, w, serial_digest));
            best_parallel = std::min(
                best_parallel, run_ms(prymbn::ExecutionPolicy::parallel, w, parallel_digest));
        }
        bool identical = serial_digest == parallel_digest;
        all_identical = all_identical && identical;
        std::printf("%6d  %9.2f  %11.2f  %7.2f  %s\n", w, best_serial, best_parallel,
                    best_serial / best_parallel, identical ? "yes" : "NO");
    }
    return all_identical ? 0 : 1;
}
