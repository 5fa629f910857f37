// Copyright 2026 The Realz Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALZ_ERROR_HPP_
#define REALZ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realz {

// Base of every exception thrown by the library. Callers that only need to
// distinguish "could not decide" from a verdict catch this type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or matrix sizes disagree with the domain or with each other.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed values: asymmetric matrices, NaN, negative caps, bad parameters.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A site without a finite occupancy cap on a domain whose configuration
// space is not otherwise bounded.
class UnboundedSiteError : public InvalidInputError {
 public:
  explicit UnboundedSiteError(std::size_t site)
      : InvalidInputError("site " + std::to_string(site) +
                          " has no finite occupancy cap"),
        site_(site) {}
  std::size_t site() const { return site_; }

 private:
  std::size_t site_;
};

// The admissible configuration space is larger than the enumeration limit.
class CapacityError : public Error {
 public:
  explicit CapacityError(std::size_t limit)
      : Error("configuration space exceeds the enumeration limit of " +
              std::to_string(limit)),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class IterationLimitError : public Error {
 public:
  using Error::Error;
};

// An operation was called with inputs violating its documented
// precondition (e.g. non-stationary correlations for a stationary solve).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Floating point solve landed inside the tolerance band where neither a
// witness nor a certificate can be confirmed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace realz

#endif  // REALZ_ERROR_HPP_
