/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/airtime.h"

#include "axtcp/error.h"

#include <cmath>

namespace axtcp
{

namespace
{

// Symbol counts are integers; absorbs rate*symbol products that are not
// exactly representable (1134.2 * 14.4 and the like).
constexpr double kSymbolSlack = 1e-9;

} // namespace

void
TimingConstants::Validate() const
{
    if (!(dlSymbol > 0 && ulSymbol > 0 && legacySymbol > 0))
    {
        throw Error(ErrorCode::Config, "symbol durations must be positive");
    }
    if (!(maxPpduDuration > 0))
    {
        throw Error(ErrorCode::Config, "max PPDU duration must be positive");
    }
    if (sifs < 0 || aifsAp < 0 || avgBackoff < 0)
    {
        throw Error(ErrorCode::Config, "inter-frame spaces must be non-negative");
    }
}

us_u
MuPpduDuration(Bits payloadBits, Mbps_u rate, us_u preamble, us_u symbol)
{
    if (payloadBits == 0)
    {
        return preamble;
    }
    const double bitsPerSymbol = rate * symbol;
    const double symbols = std::ceil(static_cast<double>(payloadBits) / bitsPerSymbol - kSymbolSlack);
    return preamble + symbols * symbol;
}

us_u
LegacyFrameDuration(Bits payloadBits, Mbps_u legacyRate, us_u legacyPreamble, us_u legacySymbol)
{
    return MuPpduDuration(payloadBits, legacyRate, legacyPreamble, legacySymbol);
}

us_u
DlPpduDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing)
{
    return MuPpduDuration(payloadBits, mcs.dlRate, mcs.dlPreamble, timing.dlSymbol);
}

us_u
UlPpduDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing)
{
    return MuPpduDuration(payloadBits, mcs.ulRate, mcs.ulPreamble, timing.ulSymbol);
}

us_u
LegacyDuration(Bits payloadBits, const McsEntry& mcs, const TimingConstants& timing)
{
    return LegacyFrameDuration(payloadBits, mcs.legacyRate, mcs.legacyPreamble, timing.legacySymbol);
}

bool
FitsPpduCap(us_u duration, const TimingConstants& timing)
{
    return duration <= timing.maxPpduDuration + 1e-9;
}

} // namespace axtcp
