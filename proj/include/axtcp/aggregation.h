/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_AGGREGATION_H
#define AXTCP_AGGREGATION_H

#include "axtcp/airtime.h"
#include "axtcp/phy-tables.h"
#include "axtcp/units.h"

#include <cstdint>
#include <vector>

namespace axtcp
{

/**
 * @brief Byte counts of the two-level (MSDU in MPDU in A-MPDU) aggregation.
 *
 * A-MPDU subframe delimiters are not modeled. The MPDU size limit applies to
 * the MSDU payload only, which yields 7 / 42 / 178 MSDUs for 1524 / 272 / 64
 * byte MSDUs.
 */
struct FrameArithmetic
{
    Bytes macHeader{28};
    Bytes fcs{4};
    Bytes tcpIpHeaders{40}; ///< 20 TCP + 20 IP
    Bytes llcSnap{8};
    Bytes subheader{14};
    Bytes msduAlign{4};
    Bytes mpduSizeLimit{11454};
    std::uint32_t baWindow{256};

    void Validate() const;
};

/// round_up(tcpPayload + TCP/IP + LLC/SNAP + subheader, align); 0 bytes is a pure TCP Ack.
Bytes MsduOnAirSize(Bytes tcpPayload, const FrameArithmetic& fa = {});

/// floor(mpduSizeLimit / msduLen).
std::uint32_t MaxMsdusPerMpdu(Bytes msduLen, const FrameArithmetic& fa = {});

/// 8 * (header + FCS + count * msduLen).
Bits MpduBits(std::uint32_t msduCount, Bytes msduLen, const FrameArithmetic& fa = {});

/// Upper bound on TCP Acks in one UL A-MPDU: baWindow * (acks per MPDU).
std::uint64_t MaxAcksCap(const FrameArithmetic& fa = {});

struct PackingResult
{
    std::uint32_t xStar{0};
    Mbps_u uAtXStar{0};
    std::vector<Mbps_u> table; ///< table[X - 1] = U(X)
};

/**
 * @brief Segments per DL MPDU maximizing the MPDU's local throughput
 *
 *   U(X) = X * L * (1 - ber)^Bits(X) / Time(X),   Time(X) = Bits(X) / rate
 *
 * over X in 1..MaxMsdusPerMpdu(msduLen). Bits(X) includes MAC header and FCS;
 * Time(X) excludes preamble and delimiters. Ties go to the smaller X.
 *
 * Throws Error(DegenerateChannel) for ber == 1 and Error(Domain) for ber
 * outside [0,1) or a non-positive rate.
 */
PackingResult OptimalSegmentsPerMpdu(double ber,
                                     Mbps_u dlRate,
                                     Bytes msduLen,
                                     Bits lDataBits,
                                     const FrameArithmetic& fa = {});

/**
 * @brief Full/Partial MPDU plan for one station's UL TCP Ack A-MPDU.
 */
struct MpduPlan
{
    std::uint32_t msdusPerMpdu{0};  ///< acks in a Full MPDU
    std::uint32_t mpduCount{0};
    std::uint32_t lastMpduMsdus{0}; ///< size of the Partial MPDU, 0 if none
    std::uint64_t totalMsdus{0};
    Bits onAirBits{0};
};

/**
 * Greedy Full MPDUs plus at most one Partial, truncated (trailing acks
 * dropped) to respect the BA window and the PPDU duration cap at the UL MCS.
 */
MpduPlan PlanAckAmpdu(std::uint64_t ackCount,
                      const McsEntry& ul,
                      const FrameArithmetic& fa,
                      const TimingConstants& timing);

/// S: the largest ack count whose plan carries every ack.
std::uint64_t MaxAcksPerStation(const McsEntry& ul,
                                const FrameArithmetic& fa,
                                const TimingConstants& timing);

} // namespace axtcp

#endif /* AXTCP_AGGREGATION_H */
