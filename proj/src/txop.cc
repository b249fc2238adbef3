/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/txop.h"

#include "axtcp/error.h"
#include "axtcp/text-util.h"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace axtcp
{

Strategy
StrategyFromId(int id)
{
    if (id < 1 || id > 3)
    {
        throw Error(ErrorCode::Domain, "invalid strategy id " + std::to_string(id));
    }
    return static_cast<Strategy>(id);
}

SeqNo
StationStream::TakeNew(std::uint64_t count)
{
    const auto first = m_nextNew;
    m_nextNew += count;
    return first;
}

void
StationStream::MarkLost(SeqNo seq)
{
    assert(seq >= m_base && seq < m_nextNew);
    m_holes.insert(seq);
}

void
StationStream::MarkRecovered(SeqNo seq)
{
    m_holes.erase(seq);
}

void
StationStream::AdvanceBase(std::uint64_t acks)
{
    assert(acks <= GetPendingAcks());
    m_base += acks;
}

void
ControlFrameSizes::Validate() const
{
    if (tfBytes == 0 || backBytes == 0 || mbaPerStationBytes == 0 || mbaBaseBytes == 0)
    {
        throw Error(ErrorCode::Config, "control frame sizes must be positive");
    }
}

DlAmpdu
BuildDlAmpdu(const StationStream& stream,
             const DlAmpduParams& params,
             std::optional<std::uint64_t> newSegmentQuota)
{
    DlAmpdu a;
    const auto& holes = stream.GetHoles();
    const auto retx = std::min<std::uint64_t>(holes.size(), params.capacitySegments);
    a.retransmissions.assign(holes.begin(), std::next(holes.begin(), static_cast<long>(retx)));

    const auto room = params.capacitySegments - retx;
    a.newFirst = stream.GetNextNew();
    a.newCount = newSegmentQuota ? std::min(room, *newSegmentQuota) : room;

    const auto total = a.SegmentCount();
    const std::uint32_t x = std::max<std::uint32_t>(params.xStar, 1);
    for (std::uint64_t off = 0; off < total; off += x)
    {
        const auto count = static_cast<std::uint32_t>(std::min<std::uint64_t>(x, total - off));
        a.mpdus.push_back({static_cast<std::uint32_t>(off), count});
        a.dataBits += MpduBits(count, params.msduLen, params.arithmetic);
    }
    a.tfBits = 8 * static_cast<Bits>(params.tfBytes);
    return a;
}

std::uint64_t
DlCapacitySegments(const McsEntry& dl,
                   std::uint32_t xStar,
                   Bytes msduLen,
                   Bytes tfBytes,
                   const FrameArithmetic& fa,
                   const TimingConstants& timing)
{
    if (fa.baWindow < 2 || xStar == 0)
    {
        return 0;
    }
    const Bits mpdu = MpduBits(xStar, msduLen, fa);
    const Bits tf = 8 * static_cast<Bits>(tfBytes);
    auto fits = [&](std::uint64_t m) {
        return FitsPpduCap(DlPpduDuration(m * mpdu + tf, dl, timing), timing);
    };
    // The TF MPDU occupies one slot of the BA window.
    std::uint64_t lo = 0;
    std::uint64_t hi = fa.baWindow - 1;
    if (fits(hi))
    {
        return hi * xStar;
    }
    while (hi - lo > 1)
    {
        const auto mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    return lo * xStar;
}

std::uint64_t
GroupAckTarget(double load, std::size_t n, std::uint64_t s)
{
    return static_cast<std::uint64_t>(std::ceil(load * static_cast<double>(n * s) - 1e-9));
}

bool
StrategyTerminated(std::span<const StationStream> streams,
                   Strategy strategy,
                   double load,
                   std::uint64_t s)
{
    switch (strategy)
    {
    case Strategy::MinimalResponse:
        return std::any_of(streams.begin(), streams.end(), [s](const StationStream& st) {
            return st.GetPendingAcks() >= s;
        });
    case Strategy::TargetResponse:
        return std::all_of(streams.begin(), streams.end(), [s](const StationStream& st) {
            return st.GetPendingAcks() >= s;
        });
    case Strategy::MaxGoodput: {
        if (!(load > 0.0 && load <= 1.0))
        {
            throw Error(ErrorCode::Domain, "load " + FormatDouble(load) + " outside (0,1]");
        }
        std::uint64_t sum = 0;
        for (const auto& st : streams)
        {
            sum += std::min(st.GetPendingAcks(), s);
        }
        return sum >= GroupAckTarget(load, streams.size(), s);
    }
    }
    throw Error(ErrorCode::Domain,
                "invalid strategy id " + std::to_string(static_cast<int>(strategy)));
}

TxopRecord
RunTxop(std::vector<StationStream>& streams,
        const TxopContext& ctx,
        Rng& rng,
        std::vector<TracePhase>* trace,
        std::uint64_t txopIndex)
{
    if (ctx.acksPerStation == 0)
    {
        throw Error(ErrorCode::Config, "stations cannot transmit any TCP Ack (S = 0)");
    }
    if (ctx.dlCapacitySegments == 0)
    {
        throw Error(ErrorCode::Config, "DL PPDU cannot carry a single data MPDU");
    }
    const auto& tm = ctx.timing;
    const auto n = streams.size();

    TxopRecord rec;
    us_u t = 0;
    auto phase = [&](std::string_view name, us_u duration, Bits bits) {
        if (trace)
        {
            trace->push_back({txopIndex, name, t, duration, bits});
        }
        t += duration;
    };

    phase("backoff_aifs", tm.avgBackoff + tm.aifsAp, 0);

    std::vector<std::optional<std::uint64_t>> quota(n);
    if (ctx.strategy == Strategy::MaxGoodput && ctx.strategy3Quota)
    {
        const auto target = GroupAckTarget(ctx.load, n, ctx.acksPerStation);
        for (std::size_t i = 0; i < n; ++i)
        {
            quota[i] = target / n + (i < target % n ? 1 : 0);
        }
    }

    const DlAmpduParams params{ctx.xStar,
                               ctx.dlCapacitySegments,
                               ctx.msduLen,
                               ctx.frames.tfBytes,
                               ctx.arithmetic};
    std::vector<double> success(ctx.xStar + 1, 1.0);
    for (std::uint32_t x = 1; x <= ctx.xStar; ++x)
    {
        success[x] = std::pow(1.0 - ctx.dlBer,
                              static_cast<double>(MpduBits(x, ctx.msduLen, ctx.arithmetic)));
    }
    const Bits backBits = 8 * static_cast<Bits>(ctx.frames.backBytes);
    const us_u backDuration = UlPpduDuration(backBits, ctx.ul, tm);

    std::vector<DlAmpdu> ampdus(n);
    do
    {
        if (rec.dlCycles >= ctx.maxCycles)
        {
            throw Error(ErrorCode::NonTerminating,
                        "strategy did not terminate within " + std::to_string(ctx.maxCycles) +
                            " DL cycles");
        }
        us_u dlDuration = 0;
        Bits dlBits = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            ampdus[i] = BuildDlAmpdu(streams[i], params, quota[i]);
            dlDuration = std::max(dlDuration, DlPpduDuration(ampdus[i].TotalBits(), ctx.dl, tm));
            dlBits += ampdus[i].TotalBits();
        }
        phase("dl_data", dlDuration, dlBits);
        rec.maxDlPpduDuration = std::max(rec.maxDlPpduDuration, dlDuration);

        for (std::size_t i = 0; i < n; ++i)
        {
            auto& a = ampdus[i];
            auto& st = streams[i];
            st.TakeNew(a.newCount);
            rec.newSegmentsSent += a.newCount;
            rec.retransmittedSegments += a.retransmissions.size();
            if (quota[i])
            {
                *quota[i] -= a.newCount;
            }
            const std::uint64_t retxEnd = a.retransmissions.size();
            for (const auto& mpdu : a.mpdus)
            {
                const bool delivered = UniformDraw(rng) < success[mpdu.count];
                const std::uint64_t end = mpdu.offset + mpdu.count;
                if (delivered)
                {
                    // new segments that arrive need no bookkeeping
                    for (std::uint64_t k = mpdu.offset; k < std::min(end, retxEnd); ++k)
                    {
                        st.MarkRecovered(a.SegmentAt(k));
                    }
                }
                else
                {
                    ++rec.lostMpdus;
                    for (std::uint64_t k = std::max<std::uint64_t>(mpdu.offset, retxEnd); k < end;
                         ++k)
                    {
                        st.MarkLost(a.SegmentAt(k));
                    }
                }
            }
        }
        phase("sifs", tm.sifs, 0);
        phase("ul_back", backDuration, backBits * n);
        phase("sifs", tm.sifs, 0);
        ++rec.dlCycles;
    } while (!StrategyTerminated(streams, ctx.strategy, ctx.load, ctx.acksPerStation));

    const Bits tfBits = 8 * static_cast<Bits>(ctx.frames.tfBytes);
    phase("tf", LegacyDuration(tfBits, ctx.dl, tm), tfBits);
    phase("sifs", tm.sifs, 0);

    std::vector<std::uint64_t> acks(n);
    Bits ulBits = 0;
    us_u ulDuration = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        acks[i] = std::min(streams[i].GetPendingAcks(), ctx.acksPerStation);
        const auto plan = PlanAckAmpdu(acks[i], ctx.ul, ctx.arithmetic, tm);
        assert(plan.totalMsdus == acks[i]);
        ulBits += plan.onAirBits;
        ulDuration = std::max(ulDuration, UlPpduDuration(plan.onAirBits, ctx.ul, tm));
        rec.ulAckMaxMpdus = std::max(rec.ulAckMaxMpdus, plan.mpduCount);
    }
    rec.ulAckPpduDuration = ulDuration;
    phase("ul_acks", ulDuration, ulBits);
    phase("sifs", tm.sifs, 0);

    const Bits mbaBits = 8 * (static_cast<Bits>(ctx.frames.mbaBaseBytes) +
                              static_cast<Bits>(n) * ctx.frames.mbaPerStationBytes);
    phase("mba", LegacyDuration(mbaBits, ctx.dl, tm), mbaBits);

    for (std::size_t i = 0; i < n; ++i)
    {
        streams[i].AdvanceBase(acks[i]);
        rec.acksTransmitted += acks[i];
    }
    rec.dataSegmentsDelivered = rec.acksTransmitted;
    rec.dataBitsDelivered = rec.dataSegmentsDelivered * 8 * static_cast<Bits>(ctx.segmentBytes);
    rec.duration = t;
    return rec;
}

} // namespace axtcp
