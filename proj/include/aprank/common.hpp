// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_COMMON_HPP
#define APRANK_COMMON_HPP

#include <stdexcept>
#include <string>

namespace aprank {

// Base for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller passed inconsistent dimensions/degrees (tensor shapes, point length).
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

// Bad argument values: invalid flags, malformed files, out-of-domain numbers.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A requested exact computation exceeds a configured size/work budget.
// The message names the cheaper alternative (usually Monte Carlo).
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace aprank

#endif
