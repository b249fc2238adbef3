/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_MCS_SELECT_H
#define AXTCP_MCS_SELECT_H

#include "axtcp/aggregation.h"
#include "axtcp/phy-tables.h"

namespace axtcp
{

struct McsPair
{
    int dl{0};
    int ul{0};

    bool operator==(const McsPair&) const = default;
};

/// Highest MCS with BER exactly 0, so the TCP Ack uplink is error-free.
int SelectUlMcs(const BerRow& ber);

/**
 * DL MCS maximizing the packed-MPDU local throughput U(X*) at that MCS's
 * rate and BER. Ties go to the higher MCS; MCSs with BER 1 score 0.
 * Throws Error(ChannelUnusable) when every MCS scores 0.
 */
int SelectDlMcs(const BerRow& ber,
                const PhyTable& phy,
                Bytes msduLen,
                Bits lDataBits,
                const FrameArithmetic& fa = {});

McsPair SelectMcsPair(const BerRow& ber,
                      const PhyTable& phy,
                      Bytes msduLen,
                      Bits lDataBits,
                      const FrameArithmetic& fa = {});

} // namespace axtcp

#endif /* AXTCP_MCS_SELECT_H */
