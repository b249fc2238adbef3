/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/text-util.h"

#include "axtcp/error.h"

#include <array>
#include <charconv>
#include <cmath>

namespace axtcp
{

std::string
FormatDouble(double value)
{
    if (std::isnan(value))
    {
        return "nan";
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

double
ParseDouble(std::string_view text)
{
    text = Trim(text);
    if (!text.empty() && text.front() == '+')
    {
        text.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    {
        throw Error(ErrorCode::Schema, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t
ParseUnsigned(std::string_view text)
{
    text = Trim(text);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    {
        throw Error(ErrorCode::Schema, "not an unsigned integer: '" + std::string(text) + "'");
    }
    return value;
}

std::string_view
Trim(std::string_view text)
{
    constexpr std::string_view ws = " \t\r\n";
    auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos)
    {
        return {};
    }
    auto last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

std::vector<std::string>
SplitFields(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        auto pos = line.find(sep, start);
        out.emplace_back(Trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos)
        {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::string_view
ToString(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::Domain:
        return "domain";
    case ErrorCode::ChannelUnusable:
        return "channel-unusable";
    case ErrorCode::DegenerateChannel:
        return "degenerate-channel";
    case ErrorCode::Schema:
        return "schema";
    case ErrorCode::Validation:
        return "validation";
    case ErrorCode::Config:
        return "config";
    case ErrorCode::NonTerminating:
        return "non-terminating";
    case ErrorCode::Io:
        return "io";
    case ErrorCode::Usage:
        return "usage";
    }
    return "unknown";
}

} // namespace axtcp
