/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "test-util.h"

#include "axtcp/sim-engine.h"

#include <numeric>

using namespace axtcp;

namespace
{

ScenarioConfig
Base(Strategy strategy = Strategy::TargetResponse, std::uint64_t txops = 300)
{
    ScenarioConfig cfg;
    cfg.strategy = strategy;
    cfg.txopCount = txops;
    return cfg;
}

} // namespace

TEST_SUITE("sim-engine")
{
    TEST_CASE("lossless goodput stays under the airtime bound and ignores the seed")
    {
        auto cfg = Base();
        const auto a = Simulate(cfg);
        cfg.seed = 999;
        const auto b = Simulate(cfg);
        CHECK(a.goodputMbps < 4 * 1201.0);
        CHECK(a.goodputMbps < 4 * 1201.0 * 1460.0 / 1524.0);
        CHECK(a.goodputMbps == b.goodputMbps);
        CHECK(a.mcs.dl == 11);
        CHECK(a.mcs.ul == 11);
        CHECK(a.acksPerStation == 11960);
        CHECK(a.xStar == 7);
    }

    TEST_CASE("same config and seed give identical metrics")
    {
        auto cfg = Base(Strategy::MinimalResponse);
        cfg.dlBerOverride = 5e-6;
        cfg.seed = 42;
        CHECK(Simulate(cfg) == Simulate(cfg));
    }

    TEST_CASE("low load trades goodput for delay")
    {
        auto s3 = Base(Strategy::MaxGoodput, 1000);
        s3.load = 0.03;
        const auto low = Simulate(s3);
        const auto full = Simulate(Base(Strategy::TargetResponse, 1000));
        CHECK(low.goodputMbps / full.goodputMbps >= 0.87);
        CHECK(low.goodputMbps / full.goodputMbps <= 0.97);
        CHECK(low.meanTxopMs < 10.0);
        CHECK(full.meanTxopMs > 50.0);
        CHECK(low.meanDlCycles == 1.0);
    }

    TEST_CASE("metrics accumulator")
    {
        MetricsAccumulator acc;
        TxopRecord r;
        r.duration = 1000;
        r.dataBitsDelivered = 2000;
        r.dlCycles = 2;
        acc.Add(r);
        r.duration = 3000;
        r.dataBitsDelivered = 2000;
        r.dlCycles = 4;
        acc.Add(r);
        const auto m = acc.Finish();
        CHECK(m.goodputMbps == doctest::Approx(1.0));
        CHECK(m.meanTxopMs == doctest::Approx(2.0));
        CHECK(m.txopP95Ms == doctest::Approx(3.0));
        CHECK(m.meanDlCycles == doctest::Approx(3.0));
        // residuals +1000 and -1000, n = 2, mean duration 2000
        CHECK(m.goodputStderr == doctest::Approx(std::sqrt(2e6 / 2.0) / 2000.0));
    }

    TEST_CASE("p95 uses the nearest rank")
    {
        MetricsAccumulator acc;
        for (int i = 1; i <= 100; ++i)
        {
            TxopRecord r;
            r.duration = 1000.0 * i;
            acc.Add(r);
        }
        CHECK(acc.Finish().txopP95Ms == doctest::Approx(95.0));
    }

    TEST_CASE("lossless steady state delivers a fixed count per TXOP")
    {
        Scenario sc(Base(Strategy::TargetResponse));
        std::vector<std::uint64_t> delivered;
        for (int t = 0; t < 50; ++t)
        {
            delivered.push_back(sc.Step().dataSegmentsDelivered);
        }
        for (auto d : delivered)
        {
            CHECK(d == 4 * 11960);
        }
    }

    TEST_CASE("configuration errors")
    {
        auto cfg = Base(Strategy::MaxGoodput);
        cfg.load = 0;
        CHECK_ERROR_CODE(Simulate(cfg), ErrorCode::Config);
        cfg.load = 1.2;
        CHECK_ERROR_CODE(Simulate(cfg), ErrorCode::Config);
        auto zero = Base();
        zero.txopCount = 0;
        CHECK_ERROR_CODE(Simulate(zero), ErrorCode::Config);
        auto stations = Base();
        stations.stations = 6;
        CHECK_ERROR_CODE(Simulate(stations), ErrorCode::Domain);
        auto noTable = Base();
        noTable.stations = 8;
        CHECK_ERROR_CODE(Simulate(noTable), ErrorCode::Config);
        auto low = Base();
        low.snrDb = 9.0;
        CHECK_ERROR_CODE(Simulate(low), ErrorCode::ChannelUnusable);
        auto dead = Base();
        dead.mcsOverride = McsPair{11, 11};
        dead.dlBerOverride = 1.0;
        CHECK_ERROR_CODE(Simulate(dead), ErrorCode::DegenerateChannel);
    }

    TEST_CASE("X* shrinks when one MPDU outlasts the DL PPDU")
    {
        auto cfg = Base(Strategy::TargetResponse, 20);
        cfg.stations = 32;
        cfg.tables.assumeSameBer = true;
        cfg.segmentBytes = 208;
        cfg.snrDb = 10.2;
        const auto ctx = PrepareTxopContext(cfg);
        REQUIRE(ctx.dl.mcs == 0);
        CHECK(ctx.xStar < 42);
        CHECK(ctx.dlCapacitySegments > 0);
        CHECK(DlCapacitySegments(ctx.dl, ctx.xStar + 1, ctx.msduLen, cfg.frames.tfBytes, {}, {}) ==
              0);
        CHECK(Simulate(cfg).goodputMbps > 0);
    }

    TEST_CASE("MCS override bypasses selection")
    {
        auto cfg = Base(Strategy::TargetResponse, 50);
        cfg.mcsOverride = McsPair{7, 5};
        const auto m = Simulate(cfg);
        CHECK(m.mcs.dl == 7);
        CHECK(m.mcs.ul == 5);
        CHECK(m.dlBer == 0.0);
        CHECK(m.acksPerStation < 11960);
    }

    TEST_CASE("load sweep keeps input order and separate seeds")
    {
        auto base = Base(Strategy::MaxGoodput, 200);
        const std::vector<double> loads{0.03, 0.1, 0.5, 0.95};
        const auto pts = Sweep(base, SweepAxis::Load, loads);
        REQUIRE(pts.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
        {
            CHECK(pts[i].value == loads[i]);
            CHECK(pts[i].config.load == loads[i]);
            CHECK(pts[i].config.seed == (base.seed ^ i));
            REQUIRE(pts[i].metrics);
            if (i > 0)
            {
                const auto& a = *pts[i - 1].metrics;
                const auto& b = *pts[i].metrics;
                CHECK(b.goodputMbps >= a.goodputMbps - 3 * (a.goodputStderr + b.goodputStderr));
            }
        }
    }

    TEST_CASE("parallel sweep equals the serial sweep")
    {
        auto base = Base(Strategy::MinimalResponse, 100);
        const std::vector<double> snrs{9.0, 13.6, 20.1, 27.1, 33.6, 36.6};
        const auto par = Sweep(base, SweepAxis::Snr, snrs);
        const auto ser = SweepSerial(base, SweepAxis::Snr, snrs);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i)
        {
            CHECK(par[i].metrics == ser[i].metrics);
            CHECK(par[i].errorCode == ser[i].errorCode);
        }
        CHECK(par[0].errorCode == ErrorCode::ChannelUnusable);
        CHECK_FALSE(par[0].metrics);
        CHECK_FALSE(par[0].error.empty());
    }

    TEST_CASE("stations sweep produces one row per value")
    {
        auto base = Base(Strategy::TargetResponse, 30);
        base.tables.assumeSameBer = true;
        const std::vector<double> n{4, 8, 5};
        const auto pts = Sweep(base, SweepAxis::Stations, n);
        REQUIRE(pts.size() == 3);
        CHECK(pts[0].metrics);
        CHECK(pts[1].metrics);
        CHECK(pts[2].errorCode == ErrorCode::Domain);
    }

    TEST_CASE("load sweep needs strategy 3")
    {
        const std::vector<double> v{0.5};
        CHECK_ERROR_CODE(Sweep(Base(), SweepAxis::Load, v), ErrorCode::Config);
        CHECK_ERROR_CODE(SweepAxisFromString("speed"), ErrorCode::Usage);
        CHECK(SweepAxisFromString("segment") == SweepAxis::Segment);
    }

    TEST_CASE("replicas")
    {
        auto cfg = Base(Strategy::TargetResponse, 40);
        cfg.dlBerOverride = 5e-6;
        const auto par = Replicate(cfg, 6);
        const auto ser = ReplicateSerial(cfg, 6);
        CHECK(par == ser);
        CHECK(par[0].goodputMbps != par[1].goodputMbps);
    }

    TEST_CASE("strategy 3 delay grows with load on average")
    {
        auto cfg = Base(Strategy::MaxGoodput, 40);
        cfg.dlBerOverride = 5e-6;
        double prev = 0;
        for (double load : {0.05, 0.2, 0.4, 0.7, 1.0})
        {
            cfg.load = load;
            const auto reps = Replicate(cfg, 30);
            double mean = 0;
            for (const auto& m : reps)
            {
                mean += m.meanTxopMs / reps.size();
            }
            CHECK(mean >= prev);
            prev = mean;
        }
    }
}
