//------------------------------------------------------------------------------
//
//   Copyright 2026 the bidmatch authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "market/io.hpp"

#include <json.hpp>

namespace market {

namespace {

using nlohmann::json;

Rat parse_rat(const json &node, const std::string &where) {
  if (node.is_number_integer())
    return Rat(static_cast<long>(node.get<long long>()));
  if (node.is_string()) {
    if (auto r = Rat::parse(node.get<std::string>())) return *r;
    throw UsageError(where + ": cannot parse rational '" + node.get<std::string>() + "'");
  }
  if (node.is_number())
    throw UsageError(where + ": floating point values are not accepted; use \"a/b\"");
  throw UsageError(where + ": expected an integer or an \"a/b\" string");
}

Ceiling parse_ceiling(const json &node, const std::string &where) {
  if (node.is_string() && node.get<std::string>() == "inf") return Ceiling::infinity();
  return Ceiling::finite(parse_rat(node, where));
}

json rat_to_json(const Rat &r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return json(r.numerator().get_si());
  return json(r.str());
}

json ceiling_to_json(const Ceiling &c) {
  return c.is_finite() ? rat_to_json(c.finite_value()) : json("inf");
}

const json &field(const json &doc, const char *name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw UsageError(std::string("missing field '") + name + "'");
  return *it;
}

template <typename T, typename Parse>
std::vector<std::vector<T>> parse_matrix(const json &node, int n, int k, const char *name,
                                         Parse parse) {
  if (!node.is_array() || static_cast<int>(node.size()) != n)
    throw UsageError(std::string(name) + ": expected " + std::to_string(n) + " rows");
  std::vector<std::vector<T>> out(n);
  for (int i = 0; i < n; ++i) {
    const json &row = node[i];
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      throw UsageError(std::string(name) + " row " + std::to_string(i) + ": expected " +
                       std::to_string(k) + " entries");
    for (int j = 0; j < k; ++j)
      out[i].push_back(parse(row[j], std::string(name) + "[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]"));
  }
  return out;
}

std::vector<Rat> parse_scales(const json &node, int len, const char *name) {
  if (!node.is_array() || static_cast<int>(node.size()) != len)
    throw UsageError(std::string(name) + ": expected " + std::to_string(len) + " entries");
  std::vector<Rat> out;
  for (int i = 0; i < len; ++i)
    out.push_back(parse_rat(node[i], std::string(name) + "[" + std::to_string(i) + "]"));
  return out;
}

json instance_body(const Instance &inst) {
  json doc;
  doc["bidders"] = inst.n;
  doc["items"] = inst.k;
  json v = json::array(), r = json::array(), m = json::array();
  for (int i = 0; i < inst.n; ++i) {
    json vr = json::array(), rr = json::array(), mr = json::array();
    for (int j = 1; j <= inst.k; ++j) {
      vr.push_back(rat_to_json(inst.v[i][j]));
      rr.push_back(rat_to_json(inst.r[i][j]));
      mr.push_back(ceiling_to_json(inst.m[i][j]));
    }
    v.push_back(std::move(vr));
    r.push_back(std::move(rr));
    m.push_back(std::move(mr));
  }
  doc["valuations"] = std::move(v);
  doc["reserves"] = std::move(r);
  doc["maxima"] = std::move(m);
  return doc;
}

json parse_document(const std::string &text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    // Re-parse with exceptions for a positioned message.
    try {
      (void)json::parse(text);
    } catch (const json::parse_error &e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    throw UsageError("invalid JSON");
  }
  if (!doc.is_object()) throw UsageError("expected a JSON object");
  return doc;
}

}  // namespace

GeneralizedInstance InstanceFile::generalized() const {
  std::vector<Rat> bs = bidder_scale.value_or(std::vector<Rat>(instance.n, Rat(1)));
  std::vector<Rat> is = item_scale.value_or(std::vector<Rat>(instance.k, Rat(1)));
  return GeneralizedInstance::make(instance, std::move(bs), std::move(is));
}

InstanceFile parse_instance(const std::string &text) {
  json doc = parse_document(text);

  const json &nj = field(doc, "bidders");
  const json &kj = field(doc, "items");
  if (!nj.is_number_integer() || !kj.is_number_integer())
    throw UsageError("'bidders' and 'items' must be integers");
  int n = nj.get<int>(), k = kj.get<int>();
  if (n < 0 || k < 0) throw UsageError("'bidders' and 'items' must be nonnegative");

  auto v = parse_matrix<Rat>(field(doc, "valuations"), n, k, "valuations", parse_rat);
  auto r = parse_matrix<Rat>(field(doc, "reserves"), n, k, "reserves", parse_rat);
  auto m = parse_matrix<Ceiling>(field(doc, "maxima"), n, k, "maxima", parse_ceiling);

  InstanceFile file;
  file.instance = Instance::make(n, k, std::move(v), std::move(r), std::move(m));
  if (doc.contains("bidder_scale"))
    file.bidder_scale = parse_scales(doc["bidder_scale"], n, "bidder_scale");
  if (doc.contains("item_scale"))
    file.item_scale = parse_scales(doc["item_scale"], k, "item_scale");
  if (file.is_generalized()) (void)file.generalized();  // validate positivity now
  return file;
}

std::string emit_instance(const Instance &inst) {
  return instance_body(inst).dump(2) + "\n";
}

std::string emit_instance(const GeneralizedInstance &g) {
  json doc = instance_body(g.base);
  json bs = json::array(), is = json::array();
  for (const Rat &c : g.bidder_scale) bs.push_back(rat_to_json(c));
  for (int j = 1; j <= g.base.k; ++j) is.push_back(rat_to_json(g.item_scale[j]));
  doc["bidder_scale"] = std::move(bs);
  doc["item_scale"] = std::move(is);
  return doc.dump(2) + "\n";
}

std::string emit_outcome(const Instance &inst, const SolveResult &result,
                         const std::string &engine) {
  json doc;
  json matching = json::array();
  for (int i = 0; i < inst.n; ++i)
    if (result.outcome.assignment[i] != 0)
      matching.push_back(json::array({i, result.outcome.assignment[i]}));
  json prices = json::array(), utilities = json::array();
  for (int j = 1; j <= inst.k; ++j) prices.push_back(rat_to_json(result.outcome.prices[j]));
  for (int i = 0; i < inst.n; ++i) {
    const Utility &u = result.outcome.utilities[i];
    utilities.push_back(u.is_finite() ? rat_to_json(u.finite_value()) : json("-inf"));
  }
  doc["matching"] = std::move(matching);
  doc["prices"] = std::move(prices);
  doc["utilities"] = std::move(utilities);
  doc["engine"] = engine;
  doc["counters"] = {{"outer_iterations", result.counters.outer_iterations},
                     {"special_executions", result.counters.special_executions},
                     {"heap_removals", result.counters.heap_removals}};
  return doc.dump(2) + "\n";
}

Outcome parse_outcome(const Instance &inst, const std::string &text) {
  json doc = parse_document(text);

  std::vector<int> assignment(inst.n, 0);
  const json &matching = field(doc, "matching");
  if (!matching.is_array()) throw UsageError("'matching' must be an array of pairs");
  for (const json &pair : matching) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw UsageError("'matching' entries must be [bidder, item] pairs");
    int i = pair[0].get<int>(), j = pair[1].get<int>();
    if (i < 0 || i >= inst.n) throw UsageError("matching: bidder index out of range");
    if (j < 1 || j > inst.k) throw UsageError("matching: item index out of range");
    assignment[i] = j;
  }

  const json &prices = field(doc, "prices");
  if (!prices.is_array() || static_cast<int>(prices.size()) != inst.k)
    throw UsageError("'prices' must list one entry per real item");
  std::vector<Rat> p{Rat(0)};
  for (int j = 0; j < inst.k; ++j)
    p.push_back(parse_rat(prices[j], "prices[" + std::to_string(j) + "]"));

  return Outcome::make(inst, std::move(assignment), std::move(p));
}

}  // namespace market
