// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "sigmamp/error.hpp"
#include "sigmamp/reproduce.hpp"

using namespace sigmamp;

namespace {

void require_item(const std::string& item, const ReproduceOptions& opts = {}) {
  CAPTURE(item);
  const ReproduceReport r = reproduce(item, opts);
  for (const ReproduceCheck& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    if (c.hard) CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK_FALSE(r.representation.empty());
  const io::json j = report_to_json(r);
  CHECK(j["item"] == item);
  CHECK(j["passed"] == true);
}

}  // namespace

TEST_CASE("worked examples reproduce") {
  for (const char* item : {"example_381", "example_con3", "example_tauod_f8", "example_tauod_f64", "table1"})
    require_item(item);
}

TEST_CASE("parameter tables reproduce") {
  for (const char* item : {"table3", "table4", "table5"}) require_item(item);
}

TEST_CASE("table 3 flags the row that disagrees with its own formula") {
  const ReproduceReport r = reproduce("table3");
  int soft_failures = 0;
  for (const ReproduceCheck& c : r.checks) soft_failures += !c.hard && !c.passed;
  CHECK(soft_failures == 1);
}

TEST_CASE("sampling item with a small trial count") {
  ReproduceOptions opts;
  opts.trials = 200;
  opts.threads = 2;
  const ReproduceReport r = reproduce("table2:3,3", opts);
  for (const ReproduceCheck& c : r.checks)
    if (c.hard) CHECK(c.passed);
  CHECK(r.data["trials"] == 200);
  CHECK(published_sampling_rate(3, 3) == doctest::Approx(0.8294));
  CHECK_FALSE(published_sampling_rate(9, 2));
  const ReproduceReport again = reproduce("table2:3,3", opts);
  CHECK(report_to_json(again).dump() == report_to_json(r).dump());
}

TEST_CASE("representation search") {
  const auto canonical = find_representation(2, 3, [](const Field&) { return true; });
  REQUIRE(canonical);
  CHECK(canonical->second.find("omega = x") != std::string::npos);
  // A predicate that only the conjugate omega^2 satisfies.
  const Field base = Field::make(2, 3);
  const Elem target = base.omega_pow(2);
  const auto conj = find_representation(2, 3, [&](const Field& f) { return f.omega().rep == target.rep; });
  REQUIRE(conj);
  CHECK(conj->first.omega().rep == target.rep);
  CHECK_FALSE(find_representation(2, 2, [](const Field&) { return false; }));
}

TEST_CASE("unknown items are rejected") {
  CHECK_THROWS_AS(reproduce("table9"), BadInput);
  CHECK_THROWS_AS(reproduce("table2:x"), BadInput);
  CHECK(reproduce_items().size() >= 9);
}
