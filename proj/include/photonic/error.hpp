// Copyright 2026 The Photonic Basis Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace photonic {

enum class ErrorKind {
  invalid_argument,  // bad value handed to a constructor or operation
  parse,             // malformed input file
  precondition,      // operation called outside its domain
  not_found,         // element / label / mode lookup failed
  numerical,         // solver did not converge, zero norm, ...
  step_failed,       // protocol step aborted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the protocol engine; carries the zero-based index of the failing step.
class StepError : public Error {
 public:
  StepError(std::size_t step, const std::string& reason)
      : Error(ErrorKind::step_failed, "step " + std::to_string(step) + ": " + reason), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace photonic
