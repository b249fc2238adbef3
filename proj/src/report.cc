/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/report.h"

#include "axtcp/text-util.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

namespace axtcp
{

namespace
{

constexpr std::size_t kColumns = 13;

std::string
MetricField(const std::optional<Metrics>& m, double Metrics::* field)
{
    return m ? FormatDouble((*m).*field) : "NA";
}

std::optional<double>
ParseOptionalDouble(std::string_view text)
{
    text = Trim(text);
    if (text.empty() || text == "NA")
    {
        return std::nullopt;
    }
    return ParseDouble(text);
}

std::string
ConfigKey(const ResultRow& r)
{
    return "n" + std::to_string(r.stations) + "/" + std::to_string(r.segment) + "B";
}

} // namespace

ResultRow
MakeResultRow(std::string scenarioId,
              const ScenarioConfig& cfg,
              const std::optional<Metrics>& metrics,
              std::optional<ErrorCode> errorCode,
              std::string error)
{
    ResultRow r;
    r.scenarioId = std::move(scenarioId);
    r.stations = cfg.stations;
    r.segment = cfg.segmentBytes;
    r.strategy = static_cast<int>(cfg.strategy);
    if (cfg.strategy == Strategy::MaxGoodput)
    {
        r.load = cfg.load;
    }
    r.snrDb = cfg.snrDb;
    if (metrics)
    {
        r.mcs = metrics->mcs;
    }
    r.metrics = metrics;
    r.errorCode = errorCode;
    r.error = std::move(error);
    return r;
}

std::string
StrategyKey(int strategy, std::optional<double> load)
{
    std::string key = "s" + std::to_string(strategy);
    if (strategy == 3 && load)
    {
        key += "@" + FormatDouble(*load);
    }
    return key;
}

void
WriteResultsCsv(std::ostream& out,
                const std::map<std::string, std::string>& echo,
                const std::vector<ResultRow>& rows)
{
    for (const auto& [key, value] : echo)
    {
        out << "# " << key << "=" << value << "\n";
    }
    out << kResultsHeader << "\n";
    for (const auto& r : rows)
    {
        if (r.errorCode)
        {
            out << "# error scenario_id=" << r.scenarioId << " code=" << ToString(*r.errorCode)
                << " message=" << r.error << "\n";
        }
        const auto& m = r.metrics;
        out << r.scenarioId << "," << r.stations << "," << r.segment << "," << r.strategy << ","
            << (r.load ? FormatDouble(*r.load) : "") << "," << FormatDouble(r.snrDb) << ","
            << (r.mcs ? std::to_string(r.mcs->dl) : "NA") << ","
            << (r.mcs ? std::to_string(r.mcs->ul) : "NA") << ","
            << MetricField(m, &Metrics::goodputMbps) << ","
            << MetricField(m, &Metrics::meanTxopMs) << ","
            << MetricField(m, &Metrics::txopP95Ms) << ","
            << MetricField(m, &Metrics::meanDlCycles) << ","
            << MetricField(m, &Metrics::goodputStderr) << "\n";
    }
}

std::vector<ResultRow>
ReadResultsCsv(std::istream& in)
{
    std::vector<ResultRow> rows;
    std::string line;
    bool headerSeen = false;
    std::size_t lineNo = 0;
    while (std::getline(in, line))
    {
        ++lineNo;
        const auto t = Trim(line);
        if (t.empty() || t.front() == '#')
        {
            continue;
        }
        if (!headerSeen)
        {
            if (t != kResultsHeader)
            {
                throw Error(ErrorCode::Schema, "results header mismatch on line " +
                                                   std::to_string(lineNo));
            }
            headerSeen = true;
            continue;
        }
        const auto f = SplitFields(t);
        if (f.size() != kColumns)
        {
            throw Error(ErrorCode::Schema,
                        "line " + std::to_string(lineNo) + ": expected " +
                            std::to_string(kColumns) + " fields, got " + std::to_string(f.size()));
        }
        ResultRow r;
        r.scenarioId = f[0];
        r.stations = static_cast<std::uint32_t>(ParseUnsigned(f[1]));
        r.segment = static_cast<Bytes>(ParseUnsigned(f[2]));
        r.strategy = static_cast<int>(ParseUnsigned(f[3]));
        r.load = ParseOptionalDouble(f[4]);
        r.snrDb = ParseDouble(f[5]);
        if (Trim(f[6]) != "NA")
        {
            r.mcs = McsPair{static_cast<int>(ParseUnsigned(f[6])),
                            static_cast<int>(ParseUnsigned(f[7]))};
        }
        const auto goodput = ParseOptionalDouble(f[8]);
        if (goodput)
        {
            Metrics m;
            m.goodputMbps = *goodput;
            m.meanTxopMs = ParseDouble(f[9]);
            m.txopP95Ms = ParseDouble(f[10]);
            m.meanDlCycles = ParseDouble(f[11]);
            m.goodputStderr = ParseDouble(f[12]);
            if (r.mcs)
            {
                m.mcs = *r.mcs;
            }
            r.metrics = m;
        }
        rows.push_back(std::move(r));
    }
    if (!headerSeen)
    {
        throw Error(ErrorCode::Schema, "results file has no header");
    }
    return rows;
}

PlotLayout
PlotLayoutFromString(std::string_view name)
{
    if (name == "goodput_vs_snr")
    {
        return PlotLayout::GoodputVsSnr;
    }
    if (name == "delay_vs_snr")
    {
        return PlotLayout::DelayVsSnr;
    }
    if (name == "goodput_vs_delay")
    {
        return PlotLayout::GoodputVsDelay;
    }
    if (name == "goodput_vs_load")
    {
        return PlotLayout::GoodputVsLoad;
    }
    throw Error(ErrorCode::Usage, "unknown plot layout '" + std::string(name) + "'");
}

PlotData
BuildPlotData(const std::vector<ResultRow>& rows, PlotLayout layout)
{
    const bool byLoad = layout == PlotLayout::GoodputVsDelay || layout == PlotLayout::GoodputVsLoad;
    std::vector<const ResultRow*> usable;
    std::set<std::string> configs;
    std::set<double> snrs;
    for (const auto& r : rows)
    {
        if (!r.metrics || (byLoad && !r.load))
        {
            continue;
        }
        usable.push_back(&r);
        configs.insert(ConfigKey(r));
        snrs.insert(r.snrDb);
    }
    if (usable.empty())
    {
        throw Error(ErrorCode::Usage, "empty result set: nothing to plot");
    }

    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, const ResultRow*>>> series;
    for (const auto* r : usable)
    {
        std::string key;
        double x = 0;
        switch (layout)
        {
        case PlotLayout::GoodputVsSnr:
        case PlotLayout::DelayVsSnr:
            key = StrategyKey(r->strategy, r->load);
            if (configs.size() > 1)
            {
                key += "/" + ConfigKey(*r);
            }
            x = r->snrDb;
            break;
        case PlotLayout::GoodputVsDelay:
        case PlotLayout::GoodputVsLoad:
            key = ConfigKey(*r);
            if (snrs.size() > 1)
            {
                key += "/snr" + FormatDouble(r->snrDb);
            }
            x = layout == PlotLayout::GoodputVsDelay ? r->metrics->meanTxopMs : *r->load;
            break;
        }
        auto [it, inserted] = series.try_emplace(key);
        if (inserted)
        {
            order.push_back(key);
        }
        it->second.emplace_back(x, r);
    }

    PlotData data;
    for (const auto& key : order)
    {
        auto& pts = series[key];
        if (layout == PlotLayout::GoodputVsDelay)
        {
            auto byLoadOrder = pts;
            std::stable_sort(byLoadOrder.begin(), byLoadOrder.end(), [](auto& a, auto& b) {
                return *a.second->load < *b.second->load;
            });
            for (std::size_t i = 1; i < byLoadOrder.size(); ++i)
            {
                if (byLoadOrder[i].first < byLoadOrder[i - 1].first)
                {
                    data.warnings.push_back("series " + key +
                                            ": mean TXOP duration decreases from load " +
                                            FormatDouble(*byLoadOrder[i - 1].second->load) +
                                            " to " + FormatDouble(*byLoadOrder[i].second->load));
                }
            }
        }
        std::stable_sort(pts.begin(), pts.end(), [](auto& a, auto& b) {
            return a.first < b.first;
        });
        for (const auto& [x, r] : pts)
        {
            const double y =
                layout == PlotLayout::DelayVsSnr ? r->metrics->meanTxopMs : r->metrics->goodputMbps;
            data.points.push_back({x, key, y});
        }
    }
    return data;
}

void
WritePlotCsv(std::ostream& out, const PlotData& data)
{
    out << "x,series,y\n";
    for (const auto& p : data.points)
    {
        out << FormatDouble(p.x) << "," << p.series << "," << FormatDouble(p.y) << "\n";
    }
}

void
WriteTraceCsv(std::ostream& out, const std::vector<TracePhase>& trace)
{
    out << "txop,phase,start_us,duration_us,bits\n";
    double txopStart = 0;
    double txopEnd = 0;
    std::optional<std::uint64_t> current;
    for (const auto& p : trace)
    {
        if (current != p.txop)
        {
            txopStart = txopEnd;
            current = p.txop;
        }
        const double start = txopStart + p.start;
        txopEnd = start + p.duration;
        out << p.txop << "," << p.phase << "," << FormatDouble(start) << ","
            << FormatDouble(p.duration) << "," << p.bits << "\n";
    }
}

} // namespace axtcp
