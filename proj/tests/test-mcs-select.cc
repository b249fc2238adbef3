/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "oracles.h"
#include "test-util.h"

#include "axtcp/mcs-select.h"

using namespace axtcp;

namespace
{

McsPair
SelectAt(double snr, Bytes segment = 1460)
{
    const auto table = EmbeddedBerTable160();
    const auto& row = table.RowAt(snr);
    return SelectMcsPair(row.ber, EmbeddedPhyTable(4), MsduOnAirSize(segment), 8 * segment, {});
}

} // namespace

TEST_SUITE("mcs-select")
{
    TEST_CASE("uplink picks the highest zero-BER MCS")
    {
        CHECK(SelectAt(36.6).ul == 11);
        CHECK(SelectAt(35.1).ul == 10);
        CHECK(SelectAt(10.2).ul == 0);
    }

    TEST_CASE("downlink picks by local throughput")
    {
        CHECK(SelectAt(36.6).dl == 11);
        // MCS 11 loses 66% of its bits at this SNR, so MCS 10 wins.
        CHECK(SelectAt(35.1).dl == 10);
        CHECK(SelectAt(30.2).dl == 7);
    }

    TEST_CASE("downlink choice equals a brute-force argmax over MCS")
    {
        const auto phy = EmbeddedPhyTable(4);
        const auto table = EmbeddedBerTable160();
        for (const auto& row : table.GetRows())
        {
            for (Bytes seg : {208u, 1460u})
            {
                const auto len = MsduOnAirSize(seg);
                int best = -1;
                double bestU = 0;
                for (int m = 0; m < kMcsCount; ++m)
                {
                    if (row.ber[m] >= 1.0)
                    {
                        continue;
                    }
                    const double rate = LookupMcs(phy, m).dlRate;
                    const auto x = oracle::PackingArgmax(row.ber[m], rate, len, 8.0 * seg);
                    const double u = oracle::LocalThroughput(x, row.ber[m], rate, len, 8.0 * seg);
                    if (u > 0 && u >= bestU * (1 - 1e-12))
                    {
                        best = m;
                        bestU = std::max(u, bestU);
                    }
                }
                CAPTURE(row.snrDb);
                CHECK(SelectDlMcs(row.ber, phy, len, 8 * seg, {}) == best);
            }
        }
    }

    TEST_CASE("uplink choice has zero BER and never drops as SNR rises")
    {
        int prev = -1;
        const auto table = EmbeddedBerTable160();
        for (const auto& row : table.GetRows())
        {
            const int ul = SelectUlMcs(row.ber);
            CHECK(row.ber[ul] == 0.0);
            CHECK(ul >= prev);
            prev = ul;
            const int dl = SelectDlMcs(row.ber, EmbeddedPhyTable(4), 1524, 11680, {});
            CHECK((ul <= dl || row.ber[dl] == 0.0));
        }
    }

    TEST_CASE("unusable rows")
    {
        BerRow ones;
        ones.fill(1.0);
        CHECK_ERROR_CODE(SelectUlMcs(ones), ErrorCode::ChannelUnusable);
        CHECK_ERROR_CODE(SelectDlMcs(ones, EmbeddedPhyTable(4), 1524, 11680, {}),
                         ErrorCode::ChannelUnusable);
    }
}
