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

#include "market/strategy.hpp"

#include <algorithm>

#include "market/solver.hpp"

namespace market {

Utility utility_under_report(const Instance &inst, int bidder, const Instance &reported) {
  if (bidder < 0 || bidder >= inst.n) throw UsageError("bidder index out of range");
  if (reported.n != inst.n || reported.k != inst.k)
    throw UsageError("reported market has a different shape");
  for (int i = 0; i < inst.n; ++i) {
    if (i == bidder) continue;
    if (reported.v[i] != inst.v[i] || reported.r[i] != inst.r[i] ||
        !std::equal(reported.m[i].begin(), reported.m[i].end(), inst.m[i].begin()))
      throw UsageError("reported market may differ only in the lying bidder's row");
  }

  Outcome out = solve_simple(reported).outcome;
  int item = out.assignment[bidder];
  return utility(inst, bidder, item, out.prices[item]);
}

void validate_restricted_family(const Instance &inst) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 1; j <= inst.k; ++j)
      if (inst.r[i][j] != Rat(0))
        throw UsageError("restricted family requires zero reserve prices");
  for (int i = 0; i < inst.n; ++i)
    for (int j = 2; j <= inst.k; ++j)
      if (inst.m[i][j] != inst.m[i][1])
        throw UsageError("restricted family requires per-bidder constant maximum prices");
  for (int a = 0; a < inst.n; ++a)
    for (int b = a + 1; b < inst.n; ++b)
      if (inst.k >= 1 && inst.m[a][1] == inst.m[b][1])
        throw UsageError("restricted family requires pairwise distinct maximum prices");
}

std::optional<MisreportResult> find_profitable_misreport_in(const Instance &inst,
                                                            const std::vector<Rat> &grid,
                                                            std::optional<int> bidder) {
  int first = bidder.value_or(0), last = bidder.value_or(inst.n - 1);
  for (int i = first; i <= last; ++i) {
    Utility honest = utility_under_report(inst, i, inst);
    for (int j = 1; j <= inst.k; ++j) {
      for (const Rat &value : grid) {
        if (value == inst.v[i][j]) continue;
        Instance reported = inst;
        reported.v[i][j] = value;
        Utility lying = utility_under_report(inst, i, reported);
        if (lying > honest) {
          MisreportResult res;
          res.instance = inst;
          res.bidder = i;
          res.item = j;
          res.reported_value = value;
          // A profitable deviation starts from a finite honest utility: the
          // honest run is feasible, so it is at least 0.
          res.true_utility_honest = honest.finite_value();
          res.true_utility_lying = lying.finite_value();
          return res;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MisreportResult> find_profitable_misreport(
    const std::function<std::optional<Instance>()> &next_instance,
    const std::vector<Rat> &grid, bool restricted) {
  while (auto inst = next_instance()) {
    if (restricted) validate_restricted_family(*inst);
    if (auto hit = find_profitable_misreport_in(*inst, grid)) return hit;
  }
  return std::nullopt;
}

}  // namespace market
