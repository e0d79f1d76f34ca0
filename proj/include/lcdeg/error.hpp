// Copyright 2026 The lcdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lcdeg {

/// Malformed or out-of-contract input (bad vertex, size mismatch, parse error).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was refused because it exceeds the configured cap.
class SearchTooLarge : public std::runtime_error {
 public:
  explicit SearchTooLarge(const std::string& what)
      : std::runtime_error("exponential search too large: " + what) {}
};

}  // namespace lcdeg
