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

#include "market/audit.hpp"

#include <set>

namespace market {

bool has_integer_data(const Instance &inst) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j <= inst.k; ++j) {
      if (!inst.v[i][j].is_integer() || !inst.r[i][j].is_integer()) return false;
      if (inst.m[i][j].is_finite() && !inst.m[i][j].finite_value().is_integer()) return false;
    }
  return true;
}

Report audit_trace(const Instance &inst, const SolveResult &result) {
  Report rep;
  const bool integral = has_integer_data(inst);
  std::vector<Rat> prices(inst.items_with_dummy(), Rat(0));
  Rat pending_delta(0);
  bool have_delta = false;
  std::set<std::pair<int, int>> dropped_pairs;

  for (const TraceEvent &event : result.trace) {
    if (const auto *d = std::get_if<DeltaComputed>(&event)) {
      if (!(d->delta > Rat(0)))
        rep.add("trace: nonpositive price increment", -1, -1, d->delta.str());
      pending_delta = d->delta;
      have_delta = true;
    } else if (const auto *p = std::get_if<PricesRaised>(&event)) {
      if (!have_delta) {
        rep.add("trace: raise without an increment", -1, -1, "");
        continue;
      }
      for (int j : p->items) {
        if (j <= 0 || j > inst.k) {
          rep.add("trace: raised a non-raisable item", -1, j, "");
          continue;
        }
        prices[j] += pending_delta;
        if (integral && !prices[j].is_integer())
          rep.add("trace: non-integer price from integer data", -1, j, prices[j].str());
      }
    } else if (const auto *e = std::get_if<EdgeDropped>(&event)) {
      if (e->max_price_hit) {
        // Once at or above its maximum price a pair is inadmissible forever,
        // so this kind of drop cannot repeat. (A pair overtaken by a cheaper
        // item can be re-matched and overtaken again; no once-per-pair claim
        // holds there.)
        if (!dropped_pairs.insert({e->bidder, e->item}).second)
          rep.add("trace: pair dropped twice at its maximum", e->bidder, e->item, "");
        if (prices[e->item] < inst.m[e->bidder][e->item])
          rep.add("trace: max-price drop below the maximum", e->bidder, e->item,
                  prices[e->item].str());
      } else {
        // The edge must have left the feasible first choice graph: some
        // other item now strictly beats it (feasibility cannot regress).
        Utility held = utility(inst, e->bidder, e->item, prices[e->item]);
        Utility best = Utility::minus_infinity();
        for (int j = 0; j <= inst.k; ++j) {
          Utility u = utility(inst, e->bidder, j, prices[j]);
          if (u > best) best = u;
        }
        if (!(held < best))
          rep.add("trace: dropped edge still a first choice", e->bidder, e->item, "");
      }
    }
  }

  if (prices != result.outcome.prices)
    rep.add("trace: replayed prices disagree with the outcome", -1, -1, "");
  if (result.outcome.prices[0] != Rat(0)) rep.add("trace: dummy price moved", -1, 0, "");
  return rep;
}

}  // namespace market
