// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "sigmamp/cli.hpp"

int main(int argc, char** argv) { return sigmamp::cli::run(argc, argv, std::cout, std::cerr); }
