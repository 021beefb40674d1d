// Copyright 2026 The dimerent Authors
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

namespace dimerent {

/// Iterative routine hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix is not a valid density matrix (trace, positivity or structure).
class NonPhysicalState : public std::domain_error {
 public:
  explicit NonPhysicalState(const std::string& what) : std::domain_error(what) {}
};

/// A query that only makes sense for entangled states was given a separable one.
class SeparableStateError : public std::domain_error {
 public:
  explicit SeparableStateError(const std::string& what) : std::domain_error(what) {}
};

/// Internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dimerent
