/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_TXOP_H
#define AXTCP_TXOP_H

#include "axtcp/aggregation.h"
#include "axtcp/airtime.h"
#include "axtcp/phy-tables.h"
#include "axtcp/units.h"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string_view>
#include <vector>

namespace axtcp
{

/// Loss draws use the standard 64-bit Mersenne Twister; its output sequence is fixed by ISO C++.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double
UniformDraw(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

enum class Strategy
{
    MinimalResponse = 1, ///< until at least one station has S acks
    TargetResponse = 2,  ///< until every station has S acks
    MaxGoodput = 3,      ///< until the group has Load * N * S acks
};

/// Throws Error(Domain) for ids other than 1, 2, 3.
Strategy StrategyFromId(int id);

/**
 * @brief TCP sequence state of one AP -> station connection.
 *
 * Every transmitted segment learns its fate from the BAck of the same cycle,
 * so [base, nextNew) splits into MAC-acked segments and holes. Only the
 * holes are stored.
 */
class StationStream
{
  public:
    SeqNo GetBase() const
    {
        return m_base;
    }

    SeqNo GetNextNew() const
    {
        return m_nextNew;
    }

    const std::set<SeqNo>& GetHoles() const
    {
        return m_holes;
    }

    /// Length of the contiguous MAC-acked run starting at base.
    std::uint64_t GetPendingAcks() const
    {
        return (m_holes.empty() ? m_nextNew : *m_holes.begin()) - m_base;
    }

    std::uint64_t GetMacAckedCount() const
    {
        return m_nextNew - m_base - m_holes.size();
    }

    bool IsMacAcked(SeqNo seq) const
    {
        return seq >= m_base && seq < m_nextNew && !m_holes.contains(seq);
    }

    /// Hands out `count` never-sent sequence numbers; returns the first.
    SeqNo TakeNew(std::uint64_t count);
    void MarkLost(SeqNo seq);
    void MarkRecovered(SeqNo seq);
    /// TCP-acks the first `acks` segments; requires acks <= GetPendingAcks().
    void AdvanceBase(std::uint64_t acks);

    bool operator==(const StationStream&) const = default;

  private:
    SeqNo m_base{0};
    SeqNo m_nextNew{0};
    std::set<SeqNo> m_holes;
};

/// Control frame sizes; not published, so these are tunable knobs.
struct ControlFrameSizes
{
    Bytes tfBytes{100};
    Bytes backBytes{64};
    Bytes mbaPerStationBytes{40};
    Bytes mbaBaseBytes{24};

    void Validate() const;
};

struct MpduSlice
{
    std::uint32_t offset; ///< index of the first segment in DlAmpdu order
    std::uint32_t count;
};

/**
 * @brief One station's DL A-MPDU: retransmissions first, then new segments,
 * X* per MPDU, plus the aggregated unicast TF MPDU.
 */
struct DlAmpdu
{
    std::vector<SeqNo> retransmissions;
    SeqNo newFirst{0};
    std::uint64_t newCount{0};
    std::vector<MpduSlice> mpdus; ///< data MPDUs only
    Bits dataBits{0};
    Bits tfBits{0};

    std::uint64_t SegmentCount() const
    {
        return retransmissions.size() + newCount;
    }

    SeqNo SegmentAt(std::uint64_t k) const
    {
        return k < retransmissions.size() ? retransmissions[k]
                                          : newFirst + (k - retransmissions.size());
    }

    Bits TotalBits() const
    {
        return dataBits + tfBits;
    }
};

struct DlAmpduParams
{
    std::uint32_t xStar{1};
    std::uint64_t capacitySegments{0};
    Bytes msduLen{0};
    Bytes tfBytes{100};
    FrameArithmetic arithmetic{};
};

/// Pure: does not touch the stream. A quota of std::nullopt means unlimited new segments.
DlAmpdu BuildDlAmpdu(const StationStream& stream,
                     const DlAmpduParams& params,
                     std::optional<std::uint64_t> newSegmentQuota = std::nullopt);

/// Per-station DL segment budget under the PPDU duration cap and the BA window (TF included).
std::uint64_t DlCapacitySegments(const McsEntry& dl,
                                 std::uint32_t xStar,
                                 Bytes msduLen,
                                 Bytes tfBytes,
                                 const FrameArithmetic& fa,
                                 const TimingConstants& timing);

/// ceil(load * n * s), the strategy 3 group ack target.
std::uint64_t GroupAckTarget(double load, std::size_t n, std::uint64_t s);

bool StrategyTerminated(std::span<const StationStream> streams,
                        Strategy strategy,
                        double load,
                        std::uint64_t s);

/// Everything a TXOP needs, resolved once per scenario.
struct TxopContext
{
    McsEntry dl;
    McsEntry ul;
    double dlBer{0};
    Strategy strategy{Strategy::TargetResponse};
    double load{1.0};
    std::uint64_t acksPerStation{0}; ///< S
    std::uint32_t xStar{1};
    std::uint64_t dlCapacitySegments{0};
    Bytes segmentBytes{1460};
    Bytes msduLen{1524};
    TimingConstants timing{};
    ControlFrameSizes frames{};
    FrameArithmetic arithmetic{};
    std::uint32_t maxCycles{10000};
    /// Strategy 3 only: cap new segments per TXOP at the group target instead of filling PPDUs.
    bool strategy3Quota{false};
};

struct TxopRecord
{
    us_u duration{0};
    std::uint32_t dlCycles{0};
    std::uint64_t dataSegmentsDelivered{0};
    Bits dataBitsDelivered{0};
    std::uint64_t acksTransmitted{0};
    std::uint64_t newSegmentsSent{0};
    std::uint64_t retransmittedSegments{0};
    std::uint64_t lostMpdus{0};
    std::uint32_t ulAckMaxMpdus{0};
    us_u ulAckPpduDuration{0};
    us_u maxDlPpduDuration{0};

    bool operator==(const TxopRecord&) const = default;
};

struct TracePhase
{
    std::uint64_t txop;
    std::string_view phase;
    us_u start; ///< relative to the TXOP start
    us_u duration;
    Bits bits;

    bool operator==(const TracePhase&) const = default;
};

/**
 * @brief Runs one TXOP: backoff + AIFS, DL MU data cycles until the strategy
 * terminates, broadcast TF, UL MU TCP Ack PPDU, Multi-Station BAck.
 *
 * Streams persist across calls. Consumes exactly one uniform draw per data
 * MPDU, in station then MPDU order. When `trace` is given, one entry per phase
 * is appended; their durations sum (in order) to the record's duration.
 *
 * Throws Error(Config) when S or the DL capacity is zero and
 * Error(NonTerminating) past ctx.maxCycles DL cycles.
 */
TxopRecord RunTxop(std::vector<StationStream>& streams,
                   const TxopContext& ctx,
                   Rng& rng,
                   std::vector<TracePhase>* trace = nullptr,
                   std::uint64_t txopIndex = 0);

} // namespace axtcp

#endif /* AXTCP_TXOP_H */
