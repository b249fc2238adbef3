/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_TESTS_TEST_UTIL_H
#define AXTCP_TESTS_TEST_UTIL_H

#include "axtcp/error.h"

#include <doctest.h>

#include <optional>

namespace axtcp::test
{

template <typename F>
std::optional<ErrorCode>
CodeOf(F&& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.GetCode();
    }
    return std::nullopt;
}

} // namespace axtcp::test

#define CHECK_ERROR_CODE(expr, code)                                                               \
    CHECK(::axtcp::test::CodeOf([&] { (void)(expr); }) == std::optional(code))

#endif /* AXTCP_TESTS_TEST_UTIL_H */
