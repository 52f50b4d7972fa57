// Serial reference vs OpenMP kernels: audit, erasure simulation, quantum check.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "eacode/serialize.hpp"

using namespace eacode;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

template <class Serial, class Parallel>
void row(const std::string& name, int reps, Serial serial, Parallel parallel) {
    decltype(serial()) a, b;
    double ts = best_of(reps, [&] { a = serial(); });
    double tp = best_of(reps, [&] { b = parallel(); });
    std::printf("%-34s %10.2f %10.2f %8.2fx  %s\n", name.c_str(), ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel timings"};
    int reps = 3;
    std::uint64_t trials = 32;
    app.add_option("--reps", reps, "Repetitions (best time is reported)")->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "Simulation trials");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %9s\n", "workload", "serial ms", "omp ms", "speedup");

    for (auto s : {construct_case3_b(6, 2, 5, 3, min_field_order(SchemeKind::Case3b, 6, 2, 5, 3)),
                   construct_case2(6, 3, 5, 3, min_field_order(SchemeKind::Case2, 6, 3, 5, 3)),
                   construct_appendix_b(6, 1, 13)}) {
        row("audit " + s.label + " (" + std::to_string(pattern_count(s.spec)) + " patterns)", reps,
            [&] { return audit_serial(s); }, [&] { return audit(s); });
    }

    std::mt19937_64 rng(1);
    SimConfig cfg;
    cfg.trials = trials;
    cfg.seed = 7;
    cfg.payload.resize(1024);
    for (auto& b : cfg.payload) b = static_cast<std::uint8_t>(rng());
    for (auto s : {construct_fig1(2), construct_case2(2, 1, 3, 2, 8)}) {
        row("simulate " + s.label + " (" + std::to_string(trials) + " trials, 1 KiB)", reps,
            [&] { return run_sim_serial(s, cfg); }, [&] { return run_sim(s, cfg); });
    }

    for (auto s : {construct_case3_a(3, 1, 3, 2, 13), construct_case3_b(4, 1, 4, 3, 25)}) {
        auto ps = enumerate_patterns(s.spec);
        row("quantum-check " + s.label + " (" + std::to_string(ps.size()) + " patterns)", reps,
            [&] { return quantum_check_serial(s, ps); }, [&] { return quantum_check(s, ps); });
    }
    return 0;
}
