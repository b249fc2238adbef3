/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "test-util.h"

#include "axtcp/report.h"

#include <sstream>

using namespace axtcp;

namespace
{

ResultRow
Row(std::string id, int strategy, std::optional<double> load, double snr, double goodput,
    double delay, std::uint32_t stations = 4, Bytes segment = 1460)
{
    ResultRow r;
    r.scenarioId = std::move(id);
    r.stations = stations;
    r.segment = segment;
    r.strategy = strategy;
    r.load = load;
    r.snrDb = snr;
    r.mcs = McsPair{11, 11};
    Metrics m;
    m.goodputMbps = goodput;
    m.meanTxopMs = delay;
    m.txopP95Ms = delay;
    m.meanDlCycles = 1;
    m.mcs = *r.mcs;
    r.metrics = m;
    return r;
}

} // namespace

TEST_SUITE("report")
{
    TEST_CASE("results CSV round-trip")
    {
        std::vector<ResultRow> rows{Row("a", 2, std::nullopt, 36.6, 4236.5, 131.9),
                                    Row("b", 3, 0.03, 36.6, 4032.25, 6.08)};
        ResultRow bad;
        bad.scenarioId = "c";
        bad.stations = 4;
        bad.segment = 208;
        bad.strategy = 1;
        bad.snrDb = 5;
        bad.errorCode = ErrorCode::ChannelUnusable;
        bad.error = "too low";
        rows.push_back(bad);

        std::ostringstream out;
        WriteResultsCsv(out, {{"seed", "7"}, {"axis", "snr"}}, rows);
        const auto text = out.str();
        CHECK(text.starts_with("# axis=snr\n# seed=7\n"));
        CHECK(text.find(std::string(kResultsHeader) + "\n") != std::string::npos);
        CHECK(text.find("# error scenario_id=c code=channel-unusable") != std::string::npos);
        CHECK(text.find("c,4,208,1,,5,NA,NA,NA,NA,NA,NA,NA\n") != std::string::npos);

        std::istringstream in(text);
        const auto back = ReadResultsCsv(in);
        REQUIRE(back.size() == 3);
        CHECK(back[0].metrics->goodputMbps == 4236.5);
        CHECK_FALSE(back[0].load);
        CHECK(back[1].load == 0.03);
        CHECK(back[1].metrics->meanTxopMs == 6.08);
        CHECK_FALSE(back[2].metrics);
        CHECK_FALSE(back[2].mcs);
    }

    TEST_CASE("malformed results")
    {
        std::istringstream noHeader("a,b\n");
        CHECK_ERROR_CODE(ReadResultsCsv(noHeader), ErrorCode::Schema);
        std::istringstream shortRow(std::string(kResultsHeader) + "\nx,4,1460\n");
        CHECK_ERROR_CODE(ReadResultsCsv(shortRow), ErrorCode::Schema);
    }

    TEST_CASE("strategy keys")
    {
        CHECK(StrategyKey(1, std::nullopt) == "s1");
        CHECK(StrategyKey(3, 0.03) == "s3@0.03");
        CHECK(StrategyKey(3, 0.95) == "s3@0.95");
    }

    TEST_CASE("goodput versus SNR keeps one series per strategy")
    {
        std::vector<ResultRow> rows;
        for (double snr : {36.6, 30.2})
        {
            rows.push_back(Row("", 1, std::nullopt, snr, 1, 1));
            rows.push_back(Row("", 2, std::nullopt, snr, 2, 2));
            rows.push_back(Row("", 3, 0.03, snr, 3, 3));
            rows.push_back(Row("", 3, 0.95, snr, 4, 4));
        }
        const auto d = BuildPlotData(rows, PlotLayout::GoodputVsSnr);
        REQUIRE(d.points.size() == 8);
        CHECK(d.points[0].series == "s1");
        CHECK(d.points[0].x == 30.2);
        CHECK(d.points[1].x == 36.6);
        CHECK(d.points[2].series == "s2");
        CHECK(d.points[4].series == "s3@0.03");
        CHECK(d.points[6].series == "s3@0.95");
        std::ostringstream out;
        WritePlotCsv(out, d);
        CHECK(out.str().starts_with("x,series,y\n30.2,s1,1\n36.6,s1,1\n"));
    }

    TEST_CASE("single point gives a single row")
    {
        const auto d =
            BuildPlotData({Row("", 2, std::nullopt, 36.6, 4000, 120)}, PlotLayout::DelayVsSnr);
        REQUIRE(d.points.size() == 1);
        CHECK(d.points[0].y == 120);
    }

    TEST_CASE("goodput versus delay sorts by delay and checks monotonicity")
    {
        std::vector<ResultRow> rows{Row("", 3, 0.5, 36.6, 4220, 60),
                                    Row("", 3, 0.03, 36.6, 4030, 6),
                                    Row("", 3, 0.2, 36.6, 4200, 30)};
        auto d = BuildPlotData(rows, PlotLayout::GoodputVsDelay);
        REQUIRE(d.points.size() == 3);
        CHECK(d.points[0].x == 6);
        CHECK(d.points[1].x == 30);
        CHECK(d.points[2].x == 60);
        CHECK(d.points[0].series == "n4/1460B");
        CHECK(d.warnings.empty());

        rows.push_back(Row("", 3, 0.7, 36.6, 4225, 50));
        d = BuildPlotData(rows, PlotLayout::GoodputVsDelay);
        CHECK(d.warnings.size() == 1);
    }

    TEST_CASE("goodput versus load separates configurations")
    {
        std::vector<ResultRow> rows{Row("", 3, 0.5, 36.6, 1, 1, 4, 1460),
                                    Row("", 3, 0.5, 36.6, 2, 1, 4, 208),
                                    Row("", 2, std::nullopt, 36.6, 3, 1)};
        const auto d = BuildPlotData(rows, PlotLayout::GoodputVsLoad);
        REQUIRE(d.points.size() == 2);
        CHECK(d.points[0].series == "n4/1460B");
        CHECK(d.points[1].series == "n4/208B");
    }

    TEST_CASE("nothing to plot")
    {
        ResultRow bad;
        bad.errorCode = ErrorCode::ChannelUnusable;
        CHECK_ERROR_CODE(BuildPlotData({}, PlotLayout::GoodputVsSnr), ErrorCode::Usage);
        CHECK_ERROR_CODE(BuildPlotData({bad}, PlotLayout::GoodputVsSnr), ErrorCode::Usage);
        CHECK_ERROR_CODE(PlotLayoutFromString("pie"), ErrorCode::Usage);
    }

    TEST_CASE("trace CSV uses absolute start times")
    {
        std::vector<TracePhase> t{{0, "backoff_aifs", 0, 110.5, 0},
                                  {0, "mba", 110.5, 20, 320},
                                  {1, "backoff_aifs", 0, 110.5, 0}};
        std::ostringstream out;
        WriteTraceCsv(out, t);
        CHECK(out.str() == "txop,phase,start_us,duration_us,bits\n"
                           "0,backoff_aifs,0,110.5,0\n"
                           "0,mba,110.5,20,320\n"
                           "1,backoff_aifs,130.5,110.5,0\n");
    }
}
