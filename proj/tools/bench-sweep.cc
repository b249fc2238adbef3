/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

// Times the serial sweep against the OpenMP sweep on the same points and
// checks that both produce identical metrics.

#include "axtcp/sim-engine.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <omp.h>

using namespace axtcp;

namespace
{

template <typename F>
double
Seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP sweep timing"};
    std::uint64_t txops = 2000;
    std::size_t points = 32;
    int threads = 0;
    app.add_option("--txops", txops, "TXOPs per point");
    app.add_option("--points", points, "load values in (0,1]");
    app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0)
    {
        omp_set_num_threads(threads);
    }

    ScenarioConfig base;
    base.strategy = Strategy::MaxGoodput;
    base.txopCount = txops;
    std::vector<double> loads;
    for (std::size_t i = 1; i <= points; ++i)
    {
        loads.push_back(static_cast<double>(i) / static_cast<double>(points));
    }

    std::vector<SweepPoint> serial;
    std::vector<SweepPoint> parallel;
    const double ts = Seconds([&] { serial = SweepSerial(base, SweepAxis::Load, loads); });
    const double tp = Seconds([&] { parallel = Sweep(base, SweepAxis::Load, loads); });

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
    {
        same = serial[i].metrics == parallel[i].metrics;
    }
    std::printf("points=%zu txops=%llu threads=%d\n",
                points,
                static_cast<unsigned long long>(txops),
                omp_get_max_threads());
    std::printf("serial   %.3f s\n", ts);
    std::printf("parallel %.3f s  speedup %.2fx\n", tp, ts / tp);
    std::printf("identical %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
