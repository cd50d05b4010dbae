// Timing harness for the OpenMP kernels against their serial references.
// Prints one row per kernel with both times and the speedup; every pair is
// checked for equality, so this doubles as a stress test at sizes the unit
// suite does not touch.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ekrgl/igraph.hpp"
#include "ekrgl/spread.hpp"

using namespace ekrgl;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double seconds(Fn&& fn) {
    Clock::time_point t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& label, double serial, double parallel, bool same) {
    std::printf("%-44s %9.3fs %9.3fs %6.2fx  %s\n", label.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif
    std::printf("%-44s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

    {
        GroupParams params{3, field_of_order(3)}; // 11232 elements
        Family ser, par;
        double ts = seconds([&] { ser = enumerate_gl_serial(params); });
        double tp = seconds([&] { par = enumerate_gl(params); });
        row("enumerate GL_3(F_3), 11232 elements", ts, tp, ser.keys() == par.keys());
    }

    {
        Family fam = enumerate_gl({2, field_of_order(7)}); // 2016 vertices
        AdjacencyBitmap ser, par;
        double ts = seconds([&] { ser = build_adjacency_serial(fam); });
        double tp = seconds([&] { par = build_adjacency(fam); });
        row("adjacency on GL_2(F_7), 2016 vertices", ts, tp, ser == par);
    }

    {
        Family fam = enumerate_gl({3, field_of_order(2)});
        AdjacencyBitmap adj = build_adjacency(fam);
        int ser = 0, par = 0;
        double ts = seconds([&] { ser = max_clique_size_serial(adj); });
        double tp = seconds([&] { par = max_clique_size(adj); });
        row("max clique on GL_3(F_2), 168 vertices", ts, tp, ser == par);
        AdjacencyBitmap co = adj.complement();
        int cser = 0, cpar = 0;
        double cs = seconds([&] { cser = max_clique_size_serial(co); });
        double cp = seconds([&] { cpar = max_clique_size(co); });
        row("max coclique on GL_3(F_2)", cs, cp, cser == cpar);
    }

    {
        Family fam = enumerate_gl({2, field_of_order(5)}); // 480 vertices
        AdjacencyBitmap adj = build_adjacency(fam);
        int ser = 0, par = 0;
        double ts = seconds([&] { ser = max_clique_size_serial(adj); });
        double tp = seconds([&] { par = max_clique_size(adj); });
        row("max clique on GL_2(F_5), 480 vertices", ts, tp, ser == par);
    }

    {
        Spread s = construct_spread(2, 4, field_of_order(16)); // 257 members, 65536 cells
        PartitionCheck ser, par;
        double ts = seconds([&] { ser = verify_partition_serial(s); });
        double tp = seconds([&] { par = verify_partition(s); });
        row("partition scan, 2-spread of F_16^4", ts, tp,
            ser.ok == par.ok && ser.first_bad_key == par.first_bad_key);
    }

    {
        Spread s = construct_spread(4, 8, field_of_order(2)); // 17 members of F_2^8
        PartitionCheck ser, par;
        double ts = seconds([&] { ser = verify_partition_serial(s); });
        double tp = seconds([&] { par = verify_partition(s); });
        row("partition scan, 4-spread of F_2^8", ts, tp,
            ser.ok == par.ok && ser.first_bad_key == par.first_bad_key);
    }

    return 0;
}
