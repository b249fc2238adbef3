/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_AIRTIME_H
#define AXTCP_AIRTIME_H

#include "axtcp/phy-tables.h"
#include "axtcp/units.h"

#include <cstdint>
#include <limits>

namespace axtcp
{

/**
 * @brief Channel-access and symbol timing (Best Effort AC, AP side).
 *
 * avgBackoff is the mean of a uniform draw from [0, cwMin-1] slots:
 * ((cwMin - 1) / 2) * slotTime = 67.5 us for the defaults.
 */
struct TimingConstants
{
    us_u sifs{16};
    us_u aifsAp{43};
    us_u aifsSta{52};
    us_u slotTime{9};
    std::uint32_t cwMin{16};
    us_u avgBackoff{67.5};
    us_u symbolBase{12.8};
    us_u dlSymbol{13.6};    ///< 12.8 + GI 0.8
    us_u ulSymbol{14.4};    ///< 12.8 + GI 1.6
    us_u legacySymbol{4.0}; ///< includes GI 0.8
    us_u maxPpduDuration{5484};

    /// Throws Error(Config) on non-positive symbol times or caps.
    void Validate() const;
};

/// preamble + ceil(bits / (rate * symbol)) * symbol; zero bits cost only the preamble.
us_u MuPpduDuration(Bits payloadBits, Mbps_u rate, us_u preamble, us_u symbol);

/// Same quantization with the 4 us legacy OFDM symbol.
us_u LegacyFrameDuration(Bits payloadBits,
                         Mbps_u legacyRate,
                         us_u legacyPreamble,
                         us_u legacySymbol = 4.0);

/// HE MU PPDU carrying DL data at this MCS (GI 0.8).
us_u DlPpduDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing);

/// HE TB PPDU carrying UL data or BAck at this MCS (GI 1.6).
us_u UlPpduDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing);

/// TF or Multi-Station BAck in legacy mode at this MCS row's legacy rate.
us_u LegacyDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing);

/// Whether a PPDU duration respects the PPDU cap (tolerates float rounding).
bool FitsPpduCap(us_u duration, const TimingConstants& timing);

} // namespace axtcp

#endif /* AXTCP_AIRTIME_H */
