/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_ERROR_H
#define AXTCP_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace axtcp
{

enum class ErrorCode
{
    Domain,            ///< argument outside its mathematical domain (e.g. MCS 12)
    ChannelUnusable,   ///< SNR below the table or no usable MCS
    DegenerateChannel, ///< BER of exactly 1
    Schema,            ///< malformed table file
    Validation,        ///< table violates a monotonicity or range invariant
    Config,            ///< inconsistent scenario configuration
    NonTerminating,    ///< TXOP exceeded the DL cycle guard
    Io,
    Usage,
};

/// Stable lowercase name used in machine-readable error lines.
std::string_view ToString(ErrorCode code);

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what),
          m_code(code)
    {
    }

    ErrorCode GetCode() const
    {
        return m_code;
    }

  private:
    ErrorCode m_code;
};

} // namespace axtcp

#endif /* AXTCP_ERROR_H */
