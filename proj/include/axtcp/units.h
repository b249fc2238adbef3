/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_UNITS_H
#define AXTCP_UNITS_H

#include <cstdint>

namespace axtcp
{

using Mbps_u = double; ///< PHY rate, megabits per second (equivalently bits per microsecond)
using us_u = double;   ///< duration, microseconds
using MHz_u = double;  ///< bandwidth
using Bits = std::uint64_t;
using Bytes = std::uint32_t;
using SeqNo = std::uint64_t; ///< TCP Data segment serial number, per station

/// Number of MCS indices in every table (0..11).
inline constexpr int kMcsCount = 12;

} // namespace axtcp

#endif /* AXTCP_UNITS_H */
