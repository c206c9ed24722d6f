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

#include "market/reduction.hpp"

namespace market {

GeneralizedInstance GeneralizedInstance::make(Instance base, std::vector<Rat> bidder_scales,
                                              std::vector<Rat> item_scales) {
  if (static_cast<int>(bidder_scales.size()) != base.n)
    throw UsageError("bidder scale vector has wrong length");
  if (static_cast<int>(item_scales.size()) != base.k)
    throw UsageError("item scale vector has wrong length");
  for (const Rat &c : bidder_scales)
    if (!(c > Rat(0))) throw UsageError("bidder scales must be positive");
  for (const Rat &c : item_scales)
    if (!(c > Rat(0))) throw UsageError("item scales must be positive");

  GeneralizedInstance g;
  g.base = std::move(base);
  g.bidder_scale = std::move(bidder_scales);
  g.item_scale.reserve(g.base.k + 1);
  g.item_scale.push_back(Rat(1));  // the dummy keeps price 0 either way
  for (Rat &c : item_scales) g.item_scale.push_back(std::move(c));
  return g;
}

Instance reduce(const GeneralizedInstance &g) {
  const Instance &b = g.base;
  std::vector<std::vector<Rat>> v(b.n), r(b.n);
  std::vector<std::vector<Ceiling>> m(b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 1; j <= b.k; ++j) {
      v[i].push_back(b.v[i][j] / g.bidder_scale[i]);
      r[i].push_back(g.item_scale[j] * b.r[i][j]);
      m[i].push_back(g.item_scale[j] * b.m[i][j]);
    }
  return Instance::make(b.n, b.k, std::move(v), std::move(r), std::move(m));
}

GeneralizedOutcome lift_outcome(const GeneralizedInstance &g, const Outcome &out) {
  GeneralizedOutcome lifted;
  lifted.assignment = out.assignment;
  lifted.prices.reserve(out.prices.size());
  for (int j = 0; j < static_cast<int>(out.prices.size()); ++j)
    lifted.prices.push_back(out.prices[j] / g.item_scale[j]);
  lifted.utilities.reserve(out.utilities.size());
  for (int i = 0; i < static_cast<int>(out.utilities.size()); ++i)
    lifted.utilities.push_back(
        out.utilities[i].is_finite()
            ? Utility::finite(g.bidder_scale[i] * out.utilities[i].finite_value())
            : Utility::minus_infinity());
  return lifted;
}

Utility generalized_utility(const GeneralizedInstance &g, int bidder, int item,
                            const Rat &price) {
  if (bidder < 0 || bidder >= g.base.n) throw UsageError("bidder index out of range");
  if (item < 0 || item > g.base.k) throw UsageError("item index out of range");
  if (price >= g.base.m[bidder][item]) return Utility::minus_infinity();
  return Utility::finite(g.base.v[bidder][item] -
                         g.bidder_scale[bidder] * g.item_scale[item] * price);
}

Report check_generalized_stable(const GeneralizedInstance &g, const GeneralizedOutcome &out) {
  const Instance &b = g.base;
  if (static_cast<int>(out.assignment.size()) != b.n ||
      static_cast<int>(out.prices.size()) != b.k + 1)
    throw UsageError("outcome shape does not match instance");

  Report rep;
  for (int i = 0; i < b.n; ++i) {
    if (out.utilities[i] < Rat(0))
      rep.add("feasible(1): negative utility", i, out.assignment[i],
              "u = " + out.utilities[i].str());
    Utility expect = generalized_utility(g, i, out.assignment[i],
                                         out.prices[out.assignment[i]]);
    if (out.utilities[i] != expect)
      rep.add("generalized: utility inconsistent with price", i, out.assignment[i],
              "u = " + out.utilities[i].str() + ", expected " + expect.str());
  }

  if (out.prices[0] != Rat(0)) rep.add("feasible(2): dummy price nonzero", -1, 0, "");
  for (int j = 1; j <= b.k; ++j)
    if (out.prices[j] < Rat(0))
      rep.add("feasible(2): negative price", -1, j, "p = " + out.prices[j].str());

  for (int i = 0; i < b.n; ++i) {
    int j = out.assignment[i];
    if (j == 0) continue;
    if (out.prices[j] < b.r[i][j])
      rep.add("feasible(3): price below reserve", i, j,
              "p = " + out.prices[j].str() + ", r = " + b.r[i][j].str());
    if (out.prices[j] >= b.m[i][j])
      rep.add("feasible(3): price at or above maximum", i, j,
              "p = " + out.prices[j].str() + ", m = " + b.m[i][j].str());
  }

  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j <= b.k; ++j) {
      Utility alt = generalized_utility(g, i, j, out.prices[j]);
      if (out.utilities[i] < alt)
        rep.add("stable: blocking pair", i, j,
                "u = " + out.utilities[i].str() + " < " + alt.str());
    }
  return rep;
}

}  // namespace market
