// Copyright 2026 The sigmamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sigmamp {

/// Failure categories. The CLI maps each to its exit code.
enum class ErrorKind {
  bad_input,            // malformed or inconsistent arguments
  verification_failed,  // a checked algebraic property does not hold
  budget_exceeded,      // an enumeration knob is too small for the request
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class BadInput : public Error {
 public:
  explicit BadInput(const std::string& what) : Error(ErrorKind::bad_input, what) {}
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& what) : Error(ErrorKind::verification_failed, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget_exceeded, what) {}
};

}  // namespace sigmamp
