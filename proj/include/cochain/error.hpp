// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cochain {

enum class ErrorCode {
  InvalidArgument,
  InvalidGraph,
  InvalidForm,
  InvalidCut,
  OutOfRange,
  BudgetExceeded,
  Parse,
  Io,
  InternalFault,
};

/// Base for every exception thrown by the library. Recognition rejections are
/// not errors and are returned by value instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the brute-force oracles when the search space exceeds the caller's
/// budget. Enumeration is never truncated silently.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t limit)
      : Error(ErrorCode::BudgetExceeded,
              "oracle budget exceeded: requires " + std::to_string(required) +
                  " states, limit is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

}  // namespace cochain
