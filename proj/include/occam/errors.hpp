// Copyright 2026 The Occam Graph Authors.
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

#ifndef OCCAM_ERRORS_HPP_
#define OCCAM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace occam {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph or membership file. Carries the 1-based line number
// (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An estimate sits on the boundary of the parameter space where the
// requested quantity is undefined (e.g. the MAP of a complete graph).
class BoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Singular or indefinite matrices, failed convergence.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Laplace approximation is not trustworthy for these statistics.
class ApproximationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The model does not expose what the operation needs (e.g. an analytic
// normalizer) or the request exceeds a supported size.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace occam

#endif  // OCCAM_ERRORS_HPP_
