/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/aggregation.h"

#include "axtcp/error.h"
#include "axtcp/text-util.h"

#include <cmath>

namespace axtcp
{

namespace
{

MpduPlan
GreedyPlan(std::uint64_t acks, std::uint32_t perMpdu, Bytes ackLen, const FrameArithmetic& fa)
{
    MpduPlan plan;
    plan.msdusPerMpdu = perMpdu;
    const auto full = acks / perMpdu;
    plan.lastMpduMsdus = static_cast<std::uint32_t>(acks % perMpdu);
    plan.mpduCount = static_cast<std::uint32_t>(full + (plan.lastMpduMsdus > 0 ? 1 : 0));
    plan.totalMsdus = acks;
    plan.onAirBits = full * MpduBits(perMpdu, ackLen, fa);
    if (plan.lastMpduMsdus > 0)
    {
        plan.onAirBits += MpduBits(plan.lastMpduMsdus, ackLen, fa);
    }
    return plan;
}

bool
Transmittable(const MpduPlan& plan,
              const McsEntry& ul,
              const FrameArithmetic& fa,
              const TimingConstants& timing)
{
    return plan.mpduCount <= fa.baWindow &&
           FitsPpduCap(UlPpduDuration(plan.onAirBits, ul, timing), timing);
}

} // namespace

void
FrameArithmetic::Validate() const
{
    if (macHeader == 0 || fcs == 0 || msduAlign == 0 || mpduSizeLimit == 0 || baWindow == 0)
    {
        throw Error(ErrorCode::Config, "frame arithmetic fields must be positive");
    }
    if (MsduOnAirSize(0, *this) > mpduSizeLimit)
    {
        throw Error(ErrorCode::Config, "a TCP Ack MSDU does not fit the MPDU size limit");
    }
}

Bytes
MsduOnAirSize(Bytes tcpPayload, const FrameArithmetic& fa)
{
    const Bytes raw = tcpPayload + fa.tcpIpHeaders + fa.llcSnap + fa.subheader;
    return (raw + fa.msduAlign - 1) / fa.msduAlign * fa.msduAlign;
}

std::uint32_t
MaxMsdusPerMpdu(Bytes msduLen, const FrameArithmetic& fa)
{
    if (msduLen == 0)
    {
        throw Error(ErrorCode::Domain, "MSDU length must be positive");
    }
    return fa.mpduSizeLimit / msduLen;
}

Bits
MpduBits(std::uint32_t msduCount, Bytes msduLen, const FrameArithmetic& fa)
{
    return 8 * (static_cast<Bits>(fa.macHeader) + fa.fcs + static_cast<Bits>(msduCount) * msduLen);
}

std::uint64_t
MaxAcksCap(const FrameArithmetic& fa)
{
    return static_cast<std::uint64_t>(fa.baWindow) * MaxMsdusPerMpdu(MsduOnAirSize(0, fa), fa);
}

PackingResult
OptimalSegmentsPerMpdu(double ber,
                       Mbps_u dlRate,
                       Bytes msduLen,
                       Bits lDataBits,
                       const FrameArithmetic& fa)
{
    if (ber == 1.0)
    {
        throw Error(ErrorCode::DegenerateChannel, "BER of 1: no MPDU can succeed");
    }
    if (!(ber >= 0.0 && ber < 1.0))
    {
        throw Error(ErrorCode::Domain, "BER " + FormatDouble(ber) + " outside [0,1)");
    }
    if (!(dlRate > 0))
    {
        throw Error(ErrorCode::Domain, "DL rate must be positive");
    }
    const auto xMax = MaxMsdusPerMpdu(msduLen, fa);
    if (xMax == 0)
    {
        throw Error(ErrorCode::Domain, "MSDU longer than the MPDU size limit");
    }

    PackingResult result;
    result.table.reserve(xMax);
    for (std::uint32_t x = 1; x <= xMax; ++x)
    {
        const auto bits = static_cast<double>(MpduBits(x, msduLen, fa));
        const double delivered = x * static_cast<double>(lDataBits) * std::pow(1.0 - ber, bits);
        const double u = delivered / (bits / dlRate);
        result.table.push_back(u);
        if (x == 1 || u > result.uAtXStar)
        {
            result.xStar = x;
            result.uAtXStar = u;
        }
    }
    return result;
}

MpduPlan
PlanAckAmpdu(std::uint64_t ackCount,
             const McsEntry& ul,
             const FrameArithmetic& fa,
             const TimingConstants& timing)
{
    const Bytes ackLen = MsduOnAirSize(0, fa);
    const auto perMpdu = MaxMsdusPerMpdu(ackLen, fa);

    auto plan = GreedyPlan(ackCount, perMpdu, ackLen, fa);
    if (Transmittable(plan, ul, fa, timing))
    {
        return plan;
    }
    // Duration and MPDU count are monotone in the ack count: bisect on the
    // largest transmittable prefix. lo always fits (0 acks = preamble only).
    std::uint64_t lo = 0;
    std::uint64_t hi = ackCount;
    while (hi - lo > 1)
    {
        const auto mid = lo + (hi - lo) / 2;
        if (Transmittable(GreedyPlan(mid, perMpdu, ackLen, fa), ul, fa, timing))
        {
            lo = mid;
        }
        else
        {
            hi = mid;
        }
    }
    return GreedyPlan(lo, perMpdu, ackLen, fa);
}

std::uint64_t
MaxAcksPerStation(const McsEntry& ul, const FrameArithmetic& fa, const TimingConstants& timing)
{
    return PlanAckAmpdu(MaxAcksCap(fa), ul, fa, timing).totalMsdus;
}

} // namespace axtcp
