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

#include <stdexcept>
#include <string>

namespace ceei {

// Raised when a raw market fails validation.
class InvalidMarket : public std::invalid_argument {
 public:
  enum class Reason { kNoBuyers, kNoItems, kNegativeValue, kEmptyDemandSet };

  InvalidMarket(Reason reason, int buyer, int item, const std::string& what)
      : std::invalid_argument(what), reason_(reason), buyer_(buyer), item_(item) {}

  Reason reason() const { return reason_; }
  // 0-based; -1 when not applicable.
  int buyer() const { return buyer_; }
  int item() const { return item_; }

 private:
  Reason reason_;
  int buyer_;
  int item_;
};

// An exhaustive search or enumeration would exceed its configured cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ceei
