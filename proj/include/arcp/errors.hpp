// Copyright 2026 The ARC-P Consensus Authors
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
#include <vector>

namespace arcp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad node ids, empty sets, duplicate edges.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request whose exact cost exceeds the configured enumeration limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration (weights, step sizes, strategy parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Adversary placement violates the declared threat scope.
class ScopeError : public Error {
 public:
  using Error::Error;
};

struct Diagnostic {
  int line = 0;
  std::string message;
};

/// Scenario text errors, all of them, with 1-based line numbers.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace arcp
