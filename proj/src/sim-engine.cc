/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/sim-engine.h"

#include "axtcp/text-util.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace axtcp
{

namespace
{

SweepPoint
RunPoint(const ScenarioConfig& base, SweepAxis axis, double value, std::size_t index)
{
    SweepPoint p;
    p.value = value;
    p.config = base;
    try
    {
        p.config = ApplyAxis(base, axis, value, index);
        p.metrics = Simulate(p.config);
    }
    catch (const Error& e)
    {
        p.errorCode = e.GetCode();
        p.error = e.what();
    }
    catch (const std::exception& e)
    {
        p.errorCode = ErrorCode::Config;
        p.error = e.what();
    }
    return p;
}

void
CheckAxisCompatible(const ScenarioConfig& base, SweepAxis axis)
{
    if (axis == SweepAxis::Load && base.strategy != Strategy::MaxGoodput)
    {
        throw Error(ErrorCode::Config, "a load sweep requires strategy 3");
    }
}

} // namespace

void
ScenarioConfig::Validate() const
{
    BandwidthForStations(stations);
    if (segmentBytes == 0)
    {
        throw Error(ErrorCode::Config, "segment size must be positive");
    }
    StrategyFromId(static_cast<int>(strategy));
    if (strategy == Strategy::MaxGoodput && !(load > 0.0 && load <= 1.0))
    {
        throw Error(ErrorCode::Config, "strategy 3 requires 0 < load <= 1");
    }
    if (txopCount == 0)
    {
        throw Error(ErrorCode::Config, "txop count must be at least 1");
    }
    if (maxCycles == 0)
    {
        throw Error(ErrorCode::Config, "max cycles must be at least 1");
    }
    if (dlBerOverride && !(*dlBerOverride >= 0.0 && *dlBerOverride <= 1.0))
    {
        throw Error(ErrorCode::Config, "DL BER override outside [0,1]");
    }
    if (mcsOverride)
    {
        for (int m : {mcsOverride->dl, mcsOverride->ul})
        {
            if (m < 0 || m >= kMcsCount)
            {
                throw Error(ErrorCode::Domain, "MCS override outside 0..11");
            }
        }
    }
    timing.Validate();
    frames.Validate();
    arithmetic.Validate();
    if (MaxMsdusPerMpdu(MsduOnAirSize(segmentBytes, arithmetic), arithmetic) == 0)
    {
        throw Error(ErrorCode::Config, "segment does not fit in one MPDU");
    }
}

TxopContext
PrepareTxopContext(const ScenarioConfig& cfg, McsPair* selected)
{
    cfg.Validate();
    const auto& phy = cfg.tables.ResolvePhy(cfg.stations);
    const Bytes msduLen = MsduOnAirSize(cfg.segmentBytes, cfg.arithmetic);
    const Bits lDataBits = 8 * static_cast<Bits>(cfg.segmentBytes);

    McsPair mcs;
    double dlBer = 0;
    if (cfg.mcsOverride)
    {
        mcs = *cfg.mcsOverride;
        dlBer = cfg.dlBerOverride
                    ? *cfg.dlBerOverride
                    : LookupBer(cfg.tables.ResolveBer(cfg.stations), cfg.snrDb, mcs.dl);
    }
    else
    {
        const auto& row = cfg.tables.ResolveBer(cfg.stations).RowAt(cfg.snrDb);
        mcs = SelectMcsPair(row.ber, phy, msduLen, lDataBits, cfg.arithmetic);
        dlBer = cfg.dlBerOverride ? *cfg.dlBerOverride : row.ber[mcs.dl];
    }
    if (selected)
    {
        *selected = mcs;
    }

    TxopContext ctx;
    ctx.dl = LookupMcs(phy, mcs.dl);
    ctx.ul = LookupMcs(phy, mcs.ul);
    ctx.dlBer = dlBer;
    ctx.strategy = cfg.strategy;
    ctx.load = cfg.strategy == Strategy::MaxGoodput ? cfg.load : 1.0;
    ctx.segmentBytes = cfg.segmentBytes;
    ctx.msduLen = msduLen;
    ctx.timing = cfg.timing;
    ctx.frames = cfg.frames;
    ctx.arithmetic = cfg.arithmetic;
    ctx.maxCycles = cfg.maxCycles;
    ctx.strategy3Quota = cfg.strategy3Quota;
    const auto packing =
        OptimalSegmentsPerMpdu(dlBer, ctx.dl.dlRate, msduLen, lDataBits, cfg.arithmetic);
    auto capacity = [&](std::uint32_t x) {
        return DlCapacitySegments(ctx.dl, x, msduLen, cfg.frames.tfBytes, cfg.arithmetic,
                                  cfg.timing);
    };
    ctx.xStar = packing.xStar;
    if (capacity(ctx.xStar) == 0)
    {
        // At low DL rates a single MPDU of X* segments outlasts the PPDU cap;
        // fall back to the best X that still fits.
        std::uint32_t best = 0;
        for (std::uint32_t x = 1; x < ctx.xStar && capacity(x) > 0; ++x)
        {
            if (best == 0 || packing.table[x - 1] > packing.table[best - 1])
            {
                best = x;
            }
        }
        ctx.xStar = best == 0 ? packing.xStar : best;
    }
    ctx.acksPerStation = MaxAcksPerStation(ctx.ul, cfg.arithmetic, cfg.timing);
    ctx.dlCapacitySegments = capacity(ctx.xStar);
    return ctx;
}

Scenario::Scenario(const ScenarioConfig& cfg)
    : m_mcs{},
      m_ctx(PrepareTxopContext(cfg, &m_mcs)),
      m_streams(cfg.stations),
      m_rng(cfg.seed)
{
}

TxopRecord
Scenario::Step(std::vector<TracePhase>* trace)
{
    return RunTxop(m_streams, m_ctx, m_rng, trace, m_txopIndex++);
}

void
MetricsAccumulator::Add(const TxopRecord& rec)
{
    m_durations.push_back(rec.duration);
    m_bits.push_back(static_cast<double>(rec.dataBitsDelivered));
    m_cycles += rec.dlCycles;
}

Metrics
MetricsAccumulator::Finish() const
{
    Metrics m;
    const auto n = m_durations.size();
    m.txops = n;
    if (n == 0)
    {
        return m;
    }
    const double totalTime = std::accumulate(m_durations.begin(), m_durations.end(), 0.0);
    const double totalBits = std::accumulate(m_bits.begin(), m_bits.end(), 0.0);
    m.goodputMbps = totalBits / totalTime;
    m.meanTxopMs = totalTime / static_cast<double>(n) / 1000.0;
    m.meanDlCycles = m_cycles / static_cast<double>(n);

    auto sorted = m_durations;
    const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n))) - 1;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(rank), sorted.end());
    m.txopP95Ms = sorted[rank] / 1000.0;

    if (n > 1)
    {
        double ss = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double r = m_bits[i] - m.goodputMbps * m_durations[i];
            ss += r * r;
        }
        const double meanDuration = totalTime / static_cast<double>(n);
        m.goodputStderr =
            std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1))) / meanDuration;
    }
    return m;
}

Metrics
Simulate(const ScenarioConfig& cfg, std::vector<TracePhase>* trace)
{
    Scenario scenario(cfg);
    MetricsAccumulator acc;
    for (std::uint64_t i = 0; i < cfg.txopCount; ++i)
    {
        acc.Add(scenario.Step(trace));
    }
    auto m = acc.Finish();
    const auto& ctx = scenario.GetContext();
    m.mcs = scenario.GetMcs();
    m.acksPerStation = ctx.acksPerStation;
    m.xStar = ctx.xStar;
    m.dlBer = ctx.dlBer;
    return m;
}

SweepAxis
SweepAxisFromString(std::string_view name)
{
    if (name == "snr")
    {
        return SweepAxis::Snr;
    }
    if (name == "load")
    {
        return SweepAxis::Load;
    }
    if (name == "stations")
    {
        return SweepAxis::Stations;
    }
    if (name == "segment")
    {
        return SweepAxis::Segment;
    }
    throw Error(ErrorCode::Usage, "unknown sweep axis '" + std::string(name) + "'");
}

std::string_view
ToString(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::Snr:
        return "snr";
    case SweepAxis::Load:
        return "load";
    case SweepAxis::Stations:
        return "stations";
    case SweepAxis::Segment:
        return "segment";
    }
    return "?";
}

ScenarioConfig
ApplyAxis(const ScenarioConfig& base, SweepAxis axis, double value, std::size_t index)
{
    auto cfg = base;
    cfg.seed = base.seed ^ static_cast<std::uint64_t>(index);
    auto asCount = [&](std::string_view what) {
        if (!(value >= 1 && value == std::floor(value) && value < 4294967296.0))
        {
            throw Error(ErrorCode::Config,
                        std::string(what) + " value " + FormatDouble(value) +
                            " is not a positive integer");
        }
        return static_cast<std::uint32_t>(value);
    };
    switch (axis)
    {
    case SweepAxis::Snr:
        cfg.snrDb = value;
        break;
    case SweepAxis::Load:
        cfg.load = value;
        break;
    case SweepAxis::Stations:
        cfg.stations = asCount("stations");
        break;
    case SweepAxis::Segment:
        cfg.segmentBytes = asCount("segment");
        break;
    }
    return cfg;
}

std::vector<SweepPoint>
Sweep(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values)
{
    CheckAxisCompatible(base, axis);
    std::vector<SweepPoint> out(values.size());
    const auto n = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
    {
        out[i] = RunPoint(base, axis, values[i], static_cast<std::size_t>(i));
    }
    return out;
}

std::vector<SweepPoint>
SweepSerial(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values)
{
    CheckAxisCompatible(base, axis);
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        out.push_back(RunPoint(base, axis, values[i], i));
    }
    return out;
}

std::vector<Metrics>
Replicate(const ScenarioConfig& cfg, std::size_t count)
{
    std::vector<Metrics> out(count);
    std::vector<std::optional<Error>> errors(count);
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k)
    {
        auto c = cfg;
        c.seed = cfg.seed ^ static_cast<std::uint64_t>(k);
        try
        {
            out[k] = Simulate(c);
        }
        catch (const Error& e)
        {
            errors[k] = e;
        }
    }
    for (const auto& e : errors)
    {
        if (e)
        {
            throw *e;
        }
    }
    return out;
}

std::vector<Metrics>
ReplicateSerial(const ScenarioConfig& cfg, std::size_t count)
{
    std::vector<Metrics> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
    {
        auto c = cfg;
        c.seed = cfg.seed ^ static_cast<std::uint64_t>(k);
        out.push_back(Simulate(c));
    }
    return out;
}

} // namespace axtcp
