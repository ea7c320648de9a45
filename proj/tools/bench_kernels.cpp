// Timing comparison of the OpenMP kernels against their serial reference
// implementations: the y-range solution search and the triple scan.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "x4q4/conditions.hpp"
#include "x4q4/diophantine.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels fall back to the serial path\n");
#endif

    {
        auto inst = x4q4::diophantine::EquationInstance::make(19, 11, 3);
        const x4q4::arith::Int y_bound = 200'000;
        const x4q4::arith::Int x_bound = 1'000'000'000;

        auto t0 = Clock::now();
        auto serial = x4q4::diophantine::search_solutions_serial(inst, y_bound, x_bound);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        auto parallel = x4q4::diophantine::search_solutions(inst, y_bound, x_bound);
        double tp = seconds_since(t0);

        bool same = serial.size() == parallel.size();
        for (size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].x == parallel[i].x && serial[i].y == parallel[i].y;
        std::printf("search y<=%s: serial %.3fs, parallel %.3fs, speedup %.2fx, match=%s\n",
                    y_bound.get_str().c_str(), ts, tp, ts / tp, same ? "yes" : "NO");
    }

    {
        const x4q4::arith::Int p_max = 500, q_max = 100, r_max = 50;
        x4q4::conditions::EnumerateOptions opts;
        opts.candidate_budget = 10'000'000;

        auto t0 = Clock::now();
        auto serial = x4q4::conditions::enumerate_triples_serial(p_max, q_max, r_max, opts);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        auto parallel = x4q4::conditions::enumerate_triples(p_max, q_max, r_max, opts);
        double tp = seconds_since(t0);

        bool same = serial.size() == parallel.size();
        for (size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].triple.p == parallel[i].triple.p &&
                   serial[i].triple.q == parallel[i].triple.q &&
                   serial[i].triple.r == parallel[i].triple.r;
        std::printf("scan %s x %s x %s: %zu triples, serial %.3fs, parallel %.3fs, "
                    "speedup %.2fx, match=%s\n",
                    p_max.get_str().c_str(), q_max.get_str().c_str(), r_max.get_str().c_str(),
                    serial.size(), ts, tp, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
