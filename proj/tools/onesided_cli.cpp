// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "onesided/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return onesided::cli::run(args, std::cout, std::cerr, onesided::cli::terminal_style(isatty(STDOUT_FILENO) != 0));
}
