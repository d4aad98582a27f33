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

#include "ceei/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ceei/additive.hpp"
#include "ceei/errors.hpp"
#include "ceei/io.hpp"
#include "ceei/leontief.hpp"
#include "ceei/oracle.hpp"
#include "ceei/reductions.hpp"

namespace ceei::cli {
namespace {

using io::Json;

struct Options {
  std::string market;
  std::string alloc;
  std::string prices;
  std::optional<std::uint64_t> cap_states;
  std::optional<int> cap_items;
  std::string query = "exists";

  std::string gadget;
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
  int universe = 0;
  std::string sets;
  int ground = 0;
  int threshold = 0;
  std::string out_prefix;
};

struct Outcome {
  int code;
  Json body;
};

SearchLimits limits_from(const Options& o) {
  SearchLimits limits;
  if (o.cap_states) limits.max_states = *o.cap_states;
  if (o.cap_items) {
    limits.max_search_items = *o.cap_items;
    limits.max_bundle_items = *o.cap_items;
  }
  return limits;
}

Market load_market(const std::string& path) {
  Json j = io::read_file(path);
  if (j.is_object() && !j.contains("class") && j.contains("market")) j = j.at("market");
  return io::market_from_json(j);
}

Allocation load_allocation(const std::string& path) {
  return io::allocation_from_json(io::unwrap(io::read_file(path), "allocation"));
}

PriceVector load_prices(const std::string& path) {
  return io::prices_from_json(io::unwrap(io::read_file(path), "prices"));
}

Json negative(const std::string& reason) {
  Json body;
  body["verdict"] = "none";
  body["reason"] = reason;
  return body;
}

Json positive(const Allocation& x, const PriceVector& p) {
  Json body;
  body["verdict"] = "equilibrium";
  body["allocation"] = io::allocation_to_json(x);
  body["prices"] = io::prices_to_json(p);
  return body;
}

Json positive(const WelfareEquilibrium& eq) {
  Json body = positive(eq.allocation, eq.prices);
  body["welfare"] = io::rational_to_json(eq.welfare);
  return body;
}

void require_leontief_command(const Market& market, const char* command) {
  if (!market.is_leontief()) {
    throw std::invalid_argument(std::string(command) + " supports leontief markets only");
  }
}

Outcome cmd_validate(const Options& o) {
  Json body;
  try {
    const Market market = load_market(o.market);
    body["valid"] = true;
    body["class"] = to_string(market.valuation());
    body["buyers"] = market.buyers();
    body["items"] = market.items();
    return {kPositive, body};
  } catch (const InvalidMarket& e) {
    body["valid"] = false;
    body["reason"] = e.what();
    if (e.buyer() >= 0) body["buyer"] = e.buyer() + 1;
    if (e.item() >= 0) body["item"] = e.item() + 1;
    return {kNegative, body};
  }
}

Outcome cmd_verify(const Options& o) {
  const Market market = load_market(o.market);
  const Allocation x = load_allocation(o.alloc);
  const PriceVector p = load_prices(o.prices);
  const EquilibriumReport report = market.is_leontief()
                                       ? leontief::verify_equilibrium(market, x, p)
                                       : additive::verify_equilibrium(market, x, p, limits_from(o));
  Json body;
  if (report.is_equilibrium()) {
    body["verdict"] = "equilibrium";
    return {kPositive, body};
  }
  body["verdict"] = "violation";
  body["reason"] = kind_name(*report.violation);
  body["witness"] = io::violation_to_json(*report.violation);
  return {kNegative, body};
}

Outcome cmd_solve(const Options& o) {
  const Market market = load_market(o.market);
  if (market.is_leontief()) {
    if (auto eq = leontief::compute_equilibrium(market)) {
      return {kPositive, positive(eq->allocation, eq->prices)};
    }
    return {kNegative, negative(leontief::equilibrium_obstruction(market)->describe())};
  }
  if (auto eq = additive::search_equilibrium(market, limits_from(o))) {
    return {kPositive, positive(eq->allocation, eq->prices)};
  }
  return {kNegative, negative("no allocation admits equilibrium prices")};
}

Outcome cmd_prices_for(const Options& o) {
  const Market market = load_market(o.market);
  const Allocation x = load_allocation(o.alloc);
  const auto p = market.is_leontief() ? leontief::prices_for_allocation(market, x)
                                      : additive::prices_for_allocation(market, x, limits_from(o));
  if (p) return {kPositive, positive(x, *p)};
  return {kNegative, negative("no prices support this allocation")};
}

Outcome cmd_alloc_for(const Options& o) {
  const Market market = load_market(o.market);
  const PriceVector p = load_prices(o.prices);
  const auto x = market.is_leontief() ? leontief::allocation_for_prices(market, p, limits_from(o))
                                      : additive::allocation_for_prices(market, p, limits_from(o));
  if (x) return {kPositive, positive(*x, p)};
  return {kNegative, negative("no allocation forms an equilibrium at these prices")};
}

Outcome cmd_maxwelfare(const Options& o) {
  const Market market = load_market(o.market);
  require_leontief_command(market, "maxwelfare");
  if (auto eq = leontief::optimal_welfare_equilibrium(market, limits_from(o))) {
    return {kPositive, positive(*eq)};
  }
  if (auto why = leontief::equilibrium_obstruction(market)) return {kNegative, negative(why->describe())};
  return {kNegative, negative("no equilibrium")};
}

Outcome cmd_apxwelfare(const Options& o) {
  const Market market = load_market(o.market);
  require_leontief_command(market, "apxwelfare");
  if (auto eq = leontief::compute_equilibrium_apx_welfare(market)) {
    return {kPositive, positive({eq->allocation, eq->prices, social_welfare(market, eq->allocation)})};
  }
  return {kNegative, negative(leontief::equilibrium_obstruction(market)->describe())};
}

Outcome cmd_oracle(const Options& o) {
  const Market market = load_market(o.market);
  const SearchLimits limits = limits_from(o);
  if (o.query == "exists") {
    if (auto eq = oracle::equilibrium_exists_bruteforce(market, limits)) {
      return {kPositive, positive(eq->allocation, eq->prices)};
    }
    return {kNegative, negative("no equilibrium")};
  }
  if (auto eq = oracle::max_welfare_equilibrium_bruteforce(market, limits)) {
    return {kPositive, positive(*eq)};
  }
  return {kNegative, negative("no equilibrium")};
}

// "1,2,3;4,5,6" -> {{1,2,3},{4,5,6}}; an empty segment is an empty set.
std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> set;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw std::invalid_argument("bad set element \"" + item + "\"");
      set.push_back(value);
    }
    sets.push_back(std::move(set));
  }
  if (!text.empty() && text.back() == ';') sets.emplace_back();
  return sets;
}

Outcome cmd_gen(const Options& o) {
  using namespace reductions;
  std::optional<Market> market;
  std::optional<Allocation> alloc;
  std::optional<PriceVector> prices;
  Json body;
  body["gadget"] = o.gadget;
  if (o.gadget == "partition" || o.gadget == "partition-additive") {
    const PartitionInstance inst{o.values};
    auto g = o.gadget == "partition" ? partition_to_leontief(inst)
                                     : partition_to_additive_prices(inst);
    market = std::move(g.market);
    prices = std::move(g.prices);
  } else if (o.gadget == "subsetsum-verify") {
    auto g = subsetsum_to_additive_verify(SubsetSumInstance{o.values, o.target});
    market = std::move(g.market);
    alloc = std::move(g.allocation);
    prices = std::move(g.prices);
  } else if (o.gadget == "subsetsum-alloc") {
    auto g = subsetsum_to_additive_allocation(SubsetSumInstance{o.values, o.target});
    market = std::move(g.market);
    alloc = std::move(g.allocation);
  } else if (o.gadget == "setpacking") {
    auto g = setpacking_to_leontief(SetPackingInstance{o.ground, parse_sets(o.sets), o.threshold});
    market = std::move(g.market);
    body["threshold"] = g.threshold;
  } else if (o.gadget == "x3c") {
    X3CInstance inst{o.universe, {}};
    for (const auto& s : parse_sets(o.sets)) {
      if (s.size() != 3) throw std::invalid_argument("X3C sets must have exactly 3 elements");
      inst.sets.push_back({s[0], s[1], s[2]});
    }
    auto g = x3c_to_additive(inst);
    market = std::move(g.market);
    body["trivially_no"] = g.trivially_no;
  } else {
    throw std::invalid_argument("unknown gadget \"" + o.gadget + "\"");
  }
  body["market"] = io::market_to_json(*market);
  if (alloc) body["allocation"] = io::allocation_to_json(*alloc);
  if (prices) body["prices"] = io::prices_to_json(*prices);

  if (!o.out_prefix.empty()) {
    io::write_file(o.out_prefix + ".market.json", body["market"]);
    if (alloc) io::write_file(o.out_prefix + ".alloc.json", Json{{"allocation", body["allocation"]}});
    if (prices) io::write_file(o.out_prefix + ".prices.json", Json{{"prices", body["prices"]}});
  }
  return {kPositive, body};
}

void add_caps(CLI::App* sub, Options& o) {
  sub->add_option("--cap-states", o.cap_states, "maximum (n+1)^m assignments to search");
  sub->add_option("--cap-items", o.cap_items, "maximum items for exhaustive searches");
}

CLI::App* add_market_command(CLI::App& app, const char* name, const char* help, Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--market", o.market, "instance file")->required();
  add_caps(sub, o);
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Competitive equilibria for indivisible goods", "ceei"};
  app.require_subcommand(1);

  auto* validate = add_market_command(app, "validate", "check an instance file", o);
  auto* verify = add_market_command(app, "verify", "check an allocation and prices", o);
  verify->add_option("--alloc", o.alloc, "allocation file")->required();
  verify->add_option("--prices", o.prices, "prices file")->required();
  auto* solve = add_market_command(app, "solve", "find an equilibrium", o);
  auto* prices_for = add_market_command(app, "prices-for", "find prices supporting an allocation", o);
  prices_for->add_option("--alloc", o.alloc, "allocation file")->required();
  auto* alloc_for = add_market_command(app, "alloc-for", "find an allocation at given prices", o);
  alloc_for->add_option("--prices", o.prices, "prices file")->required();
  auto* maxwelfare = add_market_command(app, "maxwelfare", "maximum welfare equilibrium (leontief)", o);
  auto* apxwelfare = add_market_command(app, "apxwelfare", "1/n welfare approximation (leontief)", o);
  auto* oracle = add_market_command(app, "oracle", "brute-force reference answers", o);
  oracle->add_option("--query", o.query, "exists or maxwelfare")
      ->check(CLI::IsMember({"exists", "maxwelfare"}));

  auto* gen = app.add_subcommand("gen", "generate a reduction instance");
  gen->add_option("gadget", o.gadget,
                  "partition, partition-additive, subsetsum-verify, subsetsum-alloc, setpacking, x3c")
      ->required();
  gen->add_option("--values", o.values, "comma separated integers")->delimiter(',');
  gen->add_option("--target", o.target, "subset-sum target");
  gen->add_option("--universe", o.universe, "X3C universe is {1..3n}; this is n");
  gen->add_option("--sets", o.sets, "sets as \"1,2,3;4,5,6\"");
  gen->add_option("--ground", o.ground, "set packing ground set size");
  gen->add_option("--threshold", o.threshold, "set packing threshold");
  gen->add_option("--out", o.out_prefix, "write PREFIX.market.json and companion files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPositive;
    }
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    Outcome outcome{kError, {}};
    if (validate->parsed()) outcome = cmd_validate(o);
    else if (verify->parsed()) outcome = cmd_verify(o);
    else if (solve->parsed()) outcome = cmd_solve(o);
    else if (prices_for->parsed()) outcome = cmd_prices_for(o);
    else if (alloc_for->parsed()) outcome = cmd_alloc_for(o);
    else if (maxwelfare->parsed()) outcome = cmd_maxwelfare(o);
    else if (apxwelfare->parsed()) outcome = cmd_apxwelfare(o);
    else if (oracle->parsed()) outcome = cmd_oracle(o);
    else if (gen->parsed()) outcome = cmd_gen(o);
    out << io::serialize(outcome.body);
    return outcome.code;
  } catch (const LimitExceeded& e) {
    err << "error: search cap exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace ceei::cli
