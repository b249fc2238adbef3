/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_TEXT_UTIL_H
#define AXTCP_TEXT_UTIL_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace axtcp
{

/// Shortest round-trip decimal form; output is byte-stable across runs.
std::string FormatDouble(double value);

double ParseDouble(std::string_view text);
std::uint64_t ParseUnsigned(std::string_view text);

std::string_view Trim(std::string_view text);
std::vector<std::string> SplitFields(std::string_view line, char sep = ',');

} // namespace axtcp

#endif /* AXTCP_TEXT_UTIL_H */
