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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcp {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

/// Whole-token numeric parses; empty on any trailing garbage.
std::optional<double> parse_number(std::string_view s);
std::optional<unsigned long long> parse_unsigned(std::string_view s);

/// Whitespace-separated tokens of `line`, ignoring everything after `#`.
std::vector<std::string> split_words(std::string_view line);

}  // namespace arcp
