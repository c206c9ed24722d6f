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

#include "market/oracle.hpp"

#include <algorithm>

#include "market/choice_graph.hpp"

namespace market {

namespace {

void check_capacity(const Instance &inst) {
  if (inst.n > 5 || inst.k > 3)
    throw UsageError("oracle capacity is n <= 5, k <= 3");
}

void check_integral(const Instance &inst) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j <= inst.k; ++j) {
      if (!inst.v[i][j].is_integer() || !inst.r[i][j].is_integer())
        throw UsageError("oracle requires integer data");
      if (inst.m[i][j].is_finite() && !inst.m[i][j].finite_value().is_integer())
        throw UsageError("oracle requires integer data");
    }
}

long resolve_bound(const Instance &inst, long bound) {
  long needed = default_price_bound(inst);
  if (bound < 0) return needed;
  if (bound < needed)
    throw UsageError("price grid bound below the largest finite input value");
  return bound;
}

/// Calls fn(prices) for every integer price vector in {0..bound}^k.
template <typename Fn>
void for_each_price_vector(int k, long bound, Fn &&fn) {
  std::vector<Rat> prices(k + 1, Rat(0));
  std::vector<long> grid(k + 1, 0);
  while (true) {
    fn(const_cast<const std::vector<Rat> &>(prices));
    int j = 1;
    while (j <= k && grid[j] == bound) {
      grid[j] = 0;
      prices[j] = Rat(0);
      ++j;
    }
    if (j > k) return;
    ++grid[j];
    prices[j] = Rat(grid[j]);
  }
}

}  // namespace

long default_price_bound(const Instance &inst) {
  Rat best(0);
  auto fold = [&best](const Rat &x) {
    if (x > best) best = x;
  };
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j <= inst.k; ++j) {
      fold(inst.v[i][j]);
      fold(inst.r[i][j]);
      if (inst.m[i][j].is_finite()) fold(inst.m[i][j].finite_value());
    }
  // Integral data only ever reaches here via the integrality check.
  return static_cast<long>(best.numerator().get_si());
}

StableSet enumerate_stable(const Instance &inst, long bound) {
  check_capacity(inst);
  check_integral(inst);

  StableSet set;
  set.price_bound = resolve_bound(inst, bound);

  for_each_price_vector(inst.k, set.price_bound, [&](const std::vector<Rat> &prices) {
    // Stable outcomes assign every bidder one of her feasible first choices,
    // real items pairwise distinct; backtrack over those sets only.
    ChoiceGraphs g = build_choice_graphs(inst, prices);
    std::vector<int> assignment(inst.n, 0);
    std::vector<bool> taken(inst.items_with_dummy(), false);
    auto place = [&](auto &&self, int i) -> void {
      if (i == inst.n) {
        set.outcomes.push_back(Outcome::make(inst, assignment, prices));
        return;
      }
      for (int j : g.fp_feasible[i]) {
        if (j != 0 && taken[j]) continue;
        assignment[i] = j;
        if (j != 0) taken[j] = true;
        self(self, i + 1);
        if (j != 0) taken[j] = false;
      }
    };
    place(place, 0);
  });

  set.per_bidder_max_utility.assign(inst.n, Rat(0));
  for (const Outcome &out : set.outcomes)
    for (int i = 0; i < inst.n; ++i) {
      const Rat &u = out.utilities[i].finite_value();
      if (u > set.per_bidder_max_utility[i]) set.per_bidder_max_utility[i] = u;
    }

  if (!set.outcomes.empty()) {
    std::vector<Rat> low = set.outcomes.front().prices;
    for (const Outcome &out : set.outcomes)
      for (int j = 0; j <= inst.k; ++j)
        if (out.prices[j] < low[j]) low[j] = out.prices[j];
    for (const Outcome &out : set.outcomes)
      if (out.prices == low) {
        set.min_prices = low;
        break;
      }
  }
  return set;
}

Report assert_bidder_optimal(const Instance &inst, const Outcome &out, const StableSet &s) {
  Report rep = check_stable(inst, out);
  for (const Outcome &other : s.outcomes)
    for (int j = 0; j <= inst.k; ++j)
      if (out.prices[j] > other.prices[j]) {
        rep.add("bidder-optimal: price not pointwise minimal", -1, j,
                "p = " + out.prices[j].str() + " > " + other.prices[j].str());
        break;
      }
  for (int i = 0; i < inst.n; ++i) {
    Utility target = Utility::finite(s.per_bidder_max_utility[i]);
    if (out.utilities[i] != target)
      rep.add("bidder-optimal: utility below the stable maximum", i, -1,
              "u = " + out.utilities[i].str() + ", max = " + target.str());
  }
  return rep;
}

std::vector<RelaxedOutcome> relaxed_pareto_frontier(const Instance &inst, long bound) {
  check_capacity(inst);
  check_integral(inst);
  long top = resolve_bound(inst, bound);

  std::vector<RelaxedOutcome> all;
  for_each_price_vector(inst.k, top, [&](const std::vector<Rat> &prices) {
    // Relaxed stability has no first-choice structure; enumerate every
    // matching outright and filter.
    std::vector<int> assignment(inst.n, 0);
    std::vector<bool> taken(inst.items_with_dummy(), false);
    auto place = [&](auto &&self, int i) -> void {
      if (i == inst.n) {
        Outcome out = Outcome::make(inst, assignment, prices);
        if (!check_relaxed_stable(inst, out).ok()) return;
        std::vector<Rat> u;
        u.reserve(inst.n);
        for (int b = 0; b < inst.n; ++b)
          u.push_back(relaxed_matched_utility(inst, b, out.assignment[b],
                                              out.prices[out.assignment[b]]));
        all.push_back({std::move(out), std::move(u)});
        return;
      }
      for (int j = 0; j <= inst.k; ++j) {
        if (j != 0 && taken[j]) continue;
        assignment[i] = j;
        if (j != 0) taken[j] = true;
        self(self, i + 1);
        if (j != 0) taken[j] = false;
      }
    };
    place(place, 0);
  });

  auto strictly_dominates = [&](const RelaxedOutcome &a, const RelaxedOutcome &b) {
    bool geq = true, strict = false;
    for (int i = 0; i < inst.n; ++i) {
      if (a.utilities[i] < b.utilities[i]) geq = false;
      if (a.utilities[i] > b.utilities[i]) strict = true;
    }
    return geq && strict;
  };

  std::vector<RelaxedOutcome> frontier;
  for (const RelaxedOutcome &cand : all) {
    bool dominated = false;
    for (const RelaxedOutcome &other : all)
      if (strictly_dominates(other, cand)) {
        dominated = true;
        break;
      }
    if (!dominated) frontier.push_back(cand);
  }
  return frontier;
}

Instance scale_instance(const Instance &inst, const Rat &factor) {
  if (!(factor > Rat(0))) throw UsageError("scale factor must be positive");
  std::vector<std::vector<Rat>> v(inst.n), r(inst.n);
  std::vector<std::vector<Ceiling>> m(inst.n);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 1; j <= inst.k; ++j) {
      v[i].push_back(factor * inst.v[i][j]);
      r[i].push_back(factor * inst.r[i][j]);
      m[i].push_back(factor * inst.m[i][j]);
    }
  return Instance::make(inst.n, inst.k, std::move(v), std::move(r), std::move(m));
}

}  // namespace market
