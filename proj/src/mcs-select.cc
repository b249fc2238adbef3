/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/mcs-select.h"

#include "axtcp/error.h"

namespace axtcp
{

int
SelectUlMcs(const BerRow& ber)
{
    for (int m = kMcsCount - 1; m >= 0; --m)
    {
        if (ber[m] == 0.0)
        {
            return m;
        }
    }
    throw Error(ErrorCode::ChannelUnusable, "no MCS with zero BER for a reliable uplink");
}

int
SelectDlMcs(const BerRow& ber,
            const PhyTable& phy,
            Bytes msduLen,
            Bits lDataBits,
            const FrameArithmetic& fa)
{
    int best = -1;
    double bestU = 0;
    for (int m = 0; m < kMcsCount; ++m)
    {
        if (ber[m] >= 1.0)
        {
            continue;
        }
        const double u =
            OptimalSegmentsPerMpdu(ber[m], LookupMcs(phy, m).dlRate, msduLen, lDataBits, fa)
                .uAtXStar;
        if (u > 0 && u >= bestU)
        {
            best = m;
            bestU = u;
        }
    }
    if (best < 0)
    {
        throw Error(ErrorCode::ChannelUnusable, "no DL MCS delivers any goodput");
    }
    return best;
}

McsPair
SelectMcsPair(const BerRow& ber,
              const PhyTable& phy,
              Bytes msduLen,
              Bits lDataBits,
              const FrameArithmetic& fa)
{
    return McsPair{SelectDlMcs(ber, phy, msduLen, lDataBits, fa), SelectUlMcs(ber)};
}

} // namespace axtcp
