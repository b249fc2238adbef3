/*
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "axtcp/cli.h"

#include <iostream>

int
main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return axtcp::Run(args, std::cout, std::cerr);
}
