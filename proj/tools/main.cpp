// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "rissim/cli.hpp"

int main(int argc, char** argv) { return rissim::cli::run(argc, argv, std::cout, std::cerr); }
