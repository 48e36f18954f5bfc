// Compares the serial census kernel with the OpenMP one and times the exact
// invariant stack on the reduction pipeline.

#include "petalknot/invariants.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/simplify.hpp"
#include "petalknot/tablekit.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

using namespace petalknot;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int p = argc > 1 ? std::stoi(argv[1]) : 7;
    std::printf("census benchmark at p = %d (%d OpenMP threads available)\n", p,
                omp_get_max_threads());

    ClassificationTable serial_table, parallel_table;
    const double t_serial = time_ms([&] { serial_table = classify_serial(p); });
    const double t_parallel = time_ms([&] { parallel_table = classify(p); });

    std::printf("serial:   %8.1f ms  (%d classes, %zu knot types)\n", t_serial,
                serial_table.total_classes, serial_table.rows.size());
    std::printf("parallel: %8.1f ms  (%d classes, %zu knot types)\n", t_parallel,
                parallel_table.total_classes, parallel_table.rows.size());
    std::printf("speedup:  %8.2fx\n", t_serial / t_parallel);

    bool same = serial_table.rows.size() == parallel_table.rows.size();
    for (std::size_t i = 0; same && i < serial_table.rows.size(); ++i)
        same = serial_table.rows[i].fp == parallel_table.rows[i].fp &&
               serial_table.rows[i].class_count == parallel_table.rows[i].class_count;
    std::printf("tables identical: %s\n", same ? "yes" : "NO");

    const double t_pipe =
        time_ms([&] { (void)petal_reduced_diagram(torus_permutation((p - 1) / 2)); });
    const double t_fp = time_ms(
        [&] { (void)fingerprint(petal_reduced_diagram(torus_permutation((p - 1) / 2))); });
    std::printf("pipeline (torus, p = %d): %8.2f ms\n", p, t_pipe);
    std::printf("pipeline + fingerprint:  %8.2f ms\n", t_fp);
    return same ? 0 : 1;
}
