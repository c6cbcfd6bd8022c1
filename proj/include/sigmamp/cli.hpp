// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace sigmamp::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 2;
inline constexpr int kBadInput = 3;
inline constexpr int kBudgetExceeded = 4;

/// Runs the `smp` command line. Results go to `out` as JSON; errors go to
/// `err` as {"schema", "error": {"kind", "message"}}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigmamp::cli
