// Copyright 2026 The gmplab Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace gmplab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (shape, range, operator bound).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// psd_sqrt received an operator with an eigenvalue below the clipping threshold.
class NotPsdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A value lies outside the domain of an inverted function.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Conditioning on an outcome of zero probability.
class ConditioningError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// No violating layer count was found below the search cap.
class ThresholdOverflowError : public Error {
 public:
  ThresholdOverflowError(const std::string& what, double last_value)
      : Error(what), last_value_(last_value) {}
  double last_value() const noexcept { return last_value_; }

 private:
  double last_value_;
};

/// A numerical check failed its tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmplab
