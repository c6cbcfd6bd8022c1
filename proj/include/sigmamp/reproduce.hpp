// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sigmamp/codes.hpp"
#include "sigmamp/json_io.hpp"

namespace sigmamp {

struct ReproduceOptions {
  EnumerationOptions enumeration;
  std::uint64_t trials = 10000;  // sampling items
  std::uint64_t seed = 7;
  unsigned threads = 1;
  double rate_tolerance = 0.08;
};

struct ReproduceCheck {
  std::string name;
  bool passed = false;
  bool hard = true;  // soft checks are reported but do not fail the item
  std::string detail;
};

struct ReproduceReport {
  std::string item;
  std::string representation;  // which field representation matched
  std::vector<ReproduceCheck> checks;
  io::json data = io::json::object();

  bool passed() const;
};

/// Items: example_381, example_con3, example_tauod_f8, example_tauod_f64,
/// table1, table2 (or table2:q,s), table3, table4, table5.
std::vector<std::string> reproduce_items();
ReproduceReport reproduce(const std::string& item, const ReproduceOptions& opts = {});

/// Published Algorithm 1 success counts out of 10000 for (q, s).
std::optional<double> published_sampling_rate(std::uint32_t q, std::size_t s);
ReproduceReport reproduce_table2(std::uint32_t q, std::size_t s, const ReproduceOptions& opts = {});

/// Tries the canonical field first, then each Frobenius conjugate of its
/// primitive element, then every other primitive element. Returns a
/// description of the first representation for which `check` holds.
std::optional<std::pair<Field, std::string>> find_representation(std::uint32_t p, unsigned h,
                                                                 const std::function<bool(const Field&)>& check);

io::json report_to_json(const ReproduceReport& r);

}  // namespace sigmamp
