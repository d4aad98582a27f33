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

#include "ceei/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <variant>

namespace ceei::io {
namespace {

int index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " index must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || v > std::numeric_limits<int>::max()) {
    throw ParseError(std::string(what) + " index must be at least 1");
  }
  return static_cast<int>(v - 1);
}

int count_from_json(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const Json& j = obj.at(key);
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    throw ParseError(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<int>(j.get<std::int64_t>());
}

Json bundle_to_json(const Bundle& b) {
  Json arr = Json::array();
  for (int j : b) arr.push_back(j + 1);
  return arr;
}

const char* infeasible_detail(InfeasibleAllocation::Kind k) {
  switch (k) {
    case InfeasibleAllocation::Kind::kWrongBuyerCount:
      return "wrong-buyer-count";
    case InfeasibleAllocation::Kind::kItemOutOfRange:
      return "item-out-of-range";
    case InfeasibleAllocation::Kind::kItemRepeated:
      return "item-repeated";
  }
  return "unknown";
}

}  // namespace

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  }
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json market_to_json(const Market& market) {
  Json values = Json::array();
  for (int i = 0; i < market.buyers(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < market.items(); ++j) row.push_back(rational_to_json(market.value(i, j)));
    values.push_back(std::move(row));
  }
  Json out;
  out["class"] = to_string(market.valuation());
  out["buyers"] = market.buyers();
  out["items"] = market.items();
  out["values"] = std::move(values);
  return out;
}

Market market_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("market must be a JSON object");
  if (!j.contains("class") || !j.at("class").is_string()) {
    throw ParseError("missing string key \"class\"");
  }
  const std::string cls = j.at("class").get<std::string>();
  ValuationClass valuation;
  if (cls == "leontief") {
    valuation = ValuationClass::kLeontief;
  } else if (cls == "additive") {
    valuation = ValuationClass::kAdditive;
  } else {
    throw ParseError("unknown valuation class \"" + cls + "\"");
  }
  const int n = count_from_json(j, "buyers");
  const int m = count_from_json(j, "items");
  if (!j.contains("values") || !j.at("values").is_array()) {
    throw ParseError("missing array key \"values\"");
  }
  const Json& rows = j.at("values");
  if (static_cast<int>(rows.size()) != n) throw ParseError("\"values\" must have one row per buyer");
  MatrixX<Rational> v(n, m);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m) {
      throw ParseError("row " + std::to_string(i + 1) + " of \"values\" must have one entry per item");
    }
    for (int k = 0; k < m; ++k) v(i, k) = rational_from_json(rows[i][k]);
  }
  return validate_market(RawMarket<Rational>{valuation, std::move(v)});
}

Json allocation_to_json(const Allocation& x) {
  Json arr = Json::array();
  for (const Bundle& b : x.bundles) arr.push_back(bundle_to_json(b));
  return arr;
}

Allocation allocation_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("allocation must be an array of bundles");
  Allocation x;
  for (const Json& b : j) {
    if (!b.is_array()) throw ParseError("each bundle must be an array of item indices");
    Bundle bundle;
    for (const Json& item : b) bundle.push_back(index_from_json(item, "item"));
    x.bundles.push_back(std::move(bundle));
  }
  return x;
}

Json prices_to_json(const PriceVector& p) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < p.size(); ++j) arr.push_back(rational_to_json(p(j)));
  return arr;
}

PriceVector prices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("prices must be an array");
  PriceVector p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) p(static_cast<Eigen::Index>(k)) = rational_from_json(j[k]);
  return p;
}

Json violation_to_json(const Violation<Rational>& v) {
  Json out;
  out["kind"] = kind_name(v);
  std::visit(
      [&out](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, InfeasibleAllocation>) {
          out["detail"] = infeasible_detail(w.kind);
          if (w.buyer >= 0) out["buyer"] = w.buyer + 1;
          if (w.item >= 0) out["item"] = w.item + 1;
        } else if constexpr (std::is_same_v<T, UnsoldPricedItem>) {
          out["item"] = w.item + 1;
        } else if constexpr (std::is_same_v<T, BudgetNotExhausted<Rational>>) {
          out["buyer"] = w.buyer + 1;
          out["spend"] = rational_to_json(w.spend);
        } else {
          out["buyer"] = w.buyer + 1;
          out["bundle"] = bundle_to_json(w.witness);
        }
      },
      v);
  return out;
}

Json unwrap(const Json& j, const char* key) {
  if (j.is_object()) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
  }
  return j;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(j);
}

}  // namespace ceei::io
