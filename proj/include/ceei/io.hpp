// Copyright 2026 The ceei Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ceei/market.hpp"
#include "ceei/report.hpp"

// JSON encoding of markets, allocations, prices and verdicts. Item and buyer
// indices are 1-based on the wire; rationals are strings in lowest terms
// ("p/q", or "p" for integers). Integer JSON numbers are accepted on input.
namespace ceei::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"class", "buyers", "items", "values"}. Parsing throws ParseError on shape
// or type problems and InvalidMarket when the numbers break an invariant.
Json market_to_json(const Market& market);
Market market_from_json(const Json& j);

// An array of n arrays of item indices.
Json allocation_to_json(const Allocation& x);
Allocation allocation_from_json(const Json& j);

Json prices_to_json(const PriceVector& p);
PriceVector prices_from_json(const Json& j);

// {"buyer", "bundle"} for a suboptimality witness, other fields per kind.
Json violation_to_json(const Violation<Rational>& v);

// Accepts either a bare array or an object holding the array under `key`,
// so solution files can be fed back as inputs.
Json unwrap(const Json& j, const char* key);

// Two-space indentation plus a trailing newline.
std::string serialize(const Json& j);
Json parse(const std::string& text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

}  // namespace ceei::io
