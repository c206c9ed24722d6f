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

#include "market/instance.hpp"

#include <sstream>

namespace market {

namespace {

void require(bool cond, const std::string &what) {
  if (!cond) throw UsageError(what);
}

template <typename T>
void check_shape(const std::vector<std::vector<T>> &mat, int rows, int cols,
                 const char *name) {
  require(static_cast<int>(mat.size()) == rows,
          std::string(name) + ": expected " + std::to_string(rows) + " rows");
  for (const auto &row : mat)
    require(static_cast<int>(row.size()) == cols,
            std::string(name) + ": expected " + std::to_string(cols) + " columns");
}

}  // namespace

Instance Instance::make(int n, int k, std::vector<std::vector<Rat>> valuations,
                        std::vector<std::vector<Rat>> reserves,
                        std::vector<std::vector<Ceiling>> max_prices) {
  require(n >= 0 && k >= 0, "bidder and item counts must be nonnegative");
  check_shape(valuations, n, k, "valuations");
  check_shape(reserves, n, k, "reserves");
  check_shape(max_prices, n, k, "maxima");

  Instance inst;
  inst.n = n;
  inst.k = k;
  inst.v.assign(n, {});
  inst.r.assign(n, {});
  inst.m.assign(n, {});
  for (int i = 0; i < n; ++i) {
    inst.v[i].reserve(k + 1);
    inst.r[i].reserve(k + 1);
    inst.m[i].reserve(k + 1);
    inst.v[i].push_back(Rat(0));
    inst.r[i].push_back(Rat(0));
    inst.m[i].push_back(Ceiling::infinity());
    for (int j = 0; j < k; ++j) {
      require(reserves[i][j] >= Rat(0), "reserve prices must be nonnegative (bidder " +
                                            std::to_string(i) + ", item " +
                                            std::to_string(j + 1) + ")");
      inst.v[i].push_back(std::move(valuations[i][j]));
      inst.r[i].push_back(std::move(reserves[i][j]));
      inst.m[i].push_back(std::move(max_prices[i][j]));
    }
  }
  return inst;
}

Instance Instance::make_int(int n, int k, const std::vector<std::vector<long>> &valuations,
                            const std::vector<std::vector<long>> &reserves,
                            const std::vector<std::vector<long>> &max_prices) {
  std::vector<std::vector<Rat>> v(n), r(n);
  std::vector<std::vector<Ceiling>> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      v[i].push_back(Rat(valuations[i][j]));
      r[i].push_back(Rat(reserves[i][j]));
      m[i].push_back(max_prices[i][j] < 0 ? Ceiling::infinity()
                                          : Ceiling::finite(Rat(max_prices[i][j])));
    }
  return make(n, k, std::move(v), std::move(r), std::move(m));
}

std::vector<std::pair<int, int>> Matching::real_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(item_of.size()); ++i)
    if (item_of[i] > 0) out.emplace_back(i, item_of[i]);
  return out;
}

Outcome Outcome::make(const Instance &inst, std::vector<int> assignment,
                      std::vector<Rat> prices) {
  require(static_cast<int>(assignment.size()) == inst.n, "assignment has wrong length");
  require(static_cast<int>(prices.size()) == inst.items_with_dummy(),
          "price vector has wrong length (dummy included)");
  require(prices[0] == Rat(0), "dummy price must be 0");

  std::vector<bool> taken(inst.items_with_dummy(), false);
  for (int i = 0; i < inst.n; ++i) {
    int j = assignment[i];
    require(j >= 0 && j <= inst.k, "assignment out of range for bidder " + std::to_string(i));
    if (j > 0) {
      require(!taken[j], "item " + std::to_string(j) + " assigned twice");
      taken[j] = true;
    }
  }

  Outcome out;
  out.assignment = std::move(assignment);
  out.prices = std::move(prices);
  out.utilities.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    int j = out.assignment[i];
    out.utilities.push_back(utility(inst, i, j, out.prices[j]));
  }
  return out;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto &v : violations) {
    os << v.rule;
    if (v.bidder >= 0) os << " bidder=" << v.bidder;
    if (v.item >= 0) os << " item=" << v.item;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

Utility utility(const Instance &inst, int bidder, int item, const Rat &pj) {
  if (bidder < 0 || bidder >= inst.n) throw UsageError("bidder index out of range");
  if (item < 0 || item > inst.k) throw UsageError("item index out of range");
  if (pj < Rat(0)) throw UsageError("price must be nonnegative");
  if (pj >= inst.m[bidder][item]) return Utility::minus_infinity();
  return Utility::finite(inst.v[bidder][item] - pj);
}

Report check_feasible(const Instance &inst, const Outcome &out) {
  if (static_cast<int>(out.assignment.size()) != inst.n ||
      static_cast<int>(out.prices.size()) != inst.items_with_dummy())
    throw UsageError("outcome shape does not match instance");

  Report rep;
  for (int i = 0; i < inst.n; ++i)
    if (out.utilities[i] < Rat(0))
      rep.add("feasible(1): negative utility", i, out.assignment[i],
              "u = " + out.utilities[i].str());

  if (out.prices[0] != Rat(0)) rep.add("feasible(2): dummy price nonzero", -1, 0, "");
  for (int j = 1; j <= inst.k; ++j)
    if (out.prices[j] < Rat(0))
      rep.add("feasible(2): negative price", -1, j, "p = " + out.prices[j].str());

  for (int i = 0; i < inst.n; ++i) {
    int j = out.assignment[i];
    if (j == 0) continue;
    if (out.prices[j] < inst.r[i][j])
      rep.add("feasible(3): price below reserve", i, j,
              "p = " + out.prices[j].str() + ", r = " + inst.r[i][j].str());
    if (out.prices[j] >= inst.m[i][j])
      rep.add("feasible(3): price at or above maximum", i, j,
              "p = " + out.prices[j].str() + ", m = " + inst.m[i][j].str());
  }
  return rep;
}

Report check_stable(const Instance &inst, const Outcome &out) {
  Report rep = check_feasible(inst, out);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j <= inst.k; ++j) {
      Utility alt = utility(inst, i, j, out.prices[j]);
      if (out.utilities[i] < alt)
        rep.add("stable: blocking pair", i, j,
                "u = " + out.utilities[i].str() + " < " + alt.str());
    }
  return rep;
}

Rat relaxed_matched_utility(const Instance &inst, int bidder, int item, const Rat &pj) {
  if (item == 0) return Rat(0);
  if (Ceiling::finite(pj) > inst.m[bidder][item])
    throw UsageError("relaxed utility undefined above the maximum price");
  return inst.v[bidder][item] - pj;
}

Report check_relaxed_stable(const Instance &inst, const Outcome &out) {
  if (static_cast<int>(out.assignment.size()) != inst.n ||
      static_cast<int>(out.prices.size()) != inst.items_with_dummy())
    throw UsageError("outcome shape does not match instance");

  Report rep;
  if (out.prices[0] != Rat(0)) rep.add("feasible(2): dummy price nonzero", -1, 0, "");
  for (int j = 1; j <= inst.k; ++j)
    if (out.prices[j] < Rat(0))
      rep.add("feasible(2): negative price", -1, j, "p = " + out.prices[j].str());

  // Feasibility with the closed cap: a matched pair may sit exactly at its
  // maximum price, where its utility is still v - p.
  std::vector<Rat> u(inst.n, Rat(0));
  for (int i = 0; i < inst.n; ++i) {
    int j = out.assignment[i];
    if (j == 0) continue;
    if (out.prices[j] < inst.r[i][j])
      rep.add("relaxed-feasible: price below reserve", i, j,
              "p = " + out.prices[j].str() + ", r = " + inst.r[i][j].str());
    if (Ceiling::finite(out.prices[j]) > inst.m[i][j]) {
      rep.add("relaxed-feasible: price above maximum", i, j,
              "p = " + out.prices[j].str() + ", m = " + inst.m[i][j].str());
      continue;
    }
    u[i] = relaxed_matched_utility(inst, i, j, out.prices[j]);
    if (u[i] < Rat(0))
      rep.add("relaxed-feasible: negative utility", i, j, "u = " + u[i].str());
  }

  for (int i = 0; i < inst.n; ++i)
    for (int j = 1; j <= inst.k; ++j) {
      if (out.prices[j] >= inst.m[i][j]) continue;  // clause (b)
      Rat bar = out.prices[j] > inst.r[i][j] ? out.prices[j] : inst.r[i][j];
      if (u[i] < inst.v[i][j] - bar)  // clause (a) failed
        rep.add("relaxed-stable: blocking pair", i, j,
                "u = " + u[i].str() + " < " + (inst.v[i][j] - bar).str());
    }
  return rep;
}

Dominance dominates(const Outcome &a, const Outcome &b) {
  if (a.utilities.size() != b.utilities.size())
    throw UsageError("outcomes compare over different bidder counts");
  bool geq = true, leq = true;
  for (std::size_t i = 0; i < a.utilities.size(); ++i) {
    if (a.utilities[i] < b.utilities[i]) geq = false;
    if (b.utilities[i] < a.utilities[i]) leq = false;
  }
  if (geq && leq) return Dominance::Equal;
  if (geq) return Dominance::GreaterOrEqual;
  if (leq) return Dominance::LessOrEqual;
  return Dominance::Incomparable;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Equal: return "equal";
    case Dominance::GreaterOrEqual: return "greater-or-equal";
    case Dominance::LessOrEqual: return "less-or-equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace market
