/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef AXTCP_CLI_H
#define AXTCP_CLI_H

#include "axtcp/error.h"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace axtcp
{

/**
 * Subcommands: simulate, sweep, plot, tables, packing. `args` excludes the
 * program name. Results go to --out or `out`; diagnostics go to `err`,
 * failures as one `error,<code>,<message>` line.
 *
 * Exit status: 0 success, 1 simulation or data error, 2 usage or
 * configuration error, 3 I/O error.
 */
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int ExitCodeFor(ErrorCode code);

/**
 * Value list grammar: `a,b,c`, `a:b:linN`, `a:b:logN` (N points including
 * both ends) or `a:b:step`.
 */
std::vector<double> ParseValueList(std::string_view text);

} // namespace axtcp

#endif /* AXTCP_CLI_H */
