#pragma once
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

#include <string>
#include <vector>

#include "market/rational.hpp"

namespace market {

/// A two-sided matching market: n bidders, k real items plus the implicit
/// dummy item at index 0. Every matrix is n x (k+1); column 0 always carries
/// the dummy conventions (valuation 0, reserve 0, maximum price +infinity),
/// so the dummy absorbs any bidder at price 0.
///
/// Instances are immutable after construction and safe to share across
/// threads.
struct Instance {
  int n = 0;  // bidders
  int k = 0;  // real items; item indices run 1..k, 0 is the dummy
  std::vector<std::vector<Rat>> v;      // valuations
  std::vector<std::vector<Rat>> r;      // reserve prices, all >= 0
  std::vector<std::vector<Ceiling>> m;  // maximum prices

  int items_with_dummy() const { return k + 1; }

  /// Build from n x k matrices (no dummy column; it is added here).
  /// Throws UsageError on shape mismatch or a negative reserve.
  static Instance make(int n, int k, std::vector<std::vector<Rat>> valuations,
                       std::vector<std::vector<Rat>> reserves,
                       std::vector<std::vector<Ceiling>> max_prices);

  /// Convenience for integer test data; "inf" entries in max_prices are
  /// expressed as a negative sentinel (-1).
  static Instance make_int(int n, int k, const std::vector<std::vector<long>> &valuations,
                           const std::vector<std::vector<long>> &reserves,
                           const std::vector<std::vector<long>> &max_prices);
};

/// bidder -> item assignment plus bookkeeping of which bidder owns each real
/// item. -1 means "not yet assigned"; 0 is the dummy, which any number of
/// bidders may share.
struct Matching {
  std::vector<int> item_of;   // size n; -1 unassigned, 0 dummy, 1..k real
  std::vector<int> owner_of;  // size k+1; owner_of[0] is meaningless (-1)

  static Matching empty(int n, int k) {
    Matching mu;
    mu.item_of.assign(n, -1);
    mu.owner_of.assign(k + 1, -1);
    return mu;
  }

  bool assigned(int bidder) const { return item_of[bidder] >= 0; }

  void assign(int bidder, int item) {
    unassign(bidder);
    if (item > 0) {
      if (owner_of[item] >= 0) item_of[owner_of[item]] = -1;
      owner_of[item] = bidder;
    }
    item_of[bidder] = item;
  }

  void unassign(int bidder) {
    int j = item_of[bidder];
    if (j > 0 && owner_of[j] == bidder) owner_of[j] = -1;
    item_of[bidder] = -1;
  }

  /// Pairs (bidder, item) with item > 0, in bidder order.
  std::vector<std::pair<int, int>> real_pairs() const;

  friend bool operator==(const Matching &a, const Matching &b) {
    return a.item_of == b.item_of;
  }
};

/// A solution: total assignment (dummy included), prices with the dummy
/// pinned at 0, and utilities derived from the two. Utilities are never set
/// directly; make() recomputes them so the three fields cannot drift apart.
struct Outcome {
  std::vector<int> assignment;   // size n, values in 0..k
  std::vector<Rat> prices;       // size k+1, prices[0] == 0
  std::vector<Utility> utilities;  // derived

  /// Throws UsageError on shape errors, an out-of-range item, a non-dummy
  /// item assigned twice, or prices[0] != 0.
  static Outcome make(const Instance &inst, std::vector<int> assignment,
                      std::vector<Rat> prices);
};

/// One failed check. `rule` names the violated clause, bidder/item identify
/// the offending pair when there is one (-1 otherwise).
struct Violation {
  std::string rule;
  int bidder = -1;
  int item = -1;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, int bidder, int item, std::string detail) {
    violations.push_back({std::move(rule), bidder, item, std::move(detail)});
  }
  std::string str() const;
};

/// v[i][j] - pj when pj is below the maximum price, -infinity otherwise.
/// Throws UsageError on an out-of-range index or negative price.
Utility utility(const Instance &inst, int bidder, int item, const Rat &pj);

/// Feasibility: (1) every utility >= 0, (2) dummy price 0 and all prices
/// >= 0, (3) r[i][j] <= p[j] < m[i][j] for every matched real pair.
Report check_feasible(const Instance &inst, const Outcome &out);

/// Stability: feasible and no bidder strictly prefers any item at current
/// prices to her assignment.
Report check_stable(const Instance &inst, const Outcome &out);

/// The weaker notion from the prior work this library improves on: for every
/// pair, either u_i >= v[i][j] - max(p[j], r[i][j]) or p[j] >= m[i][j].
/// The price cap is closed here: a matched pair may sit exactly at its
/// maximum price with utility v - p (that boundary is where bidder-optimal
/// solutions stop existing, see the relaxed Pareto frontier in the oracle).
Report check_relaxed_stable(const Instance &inst, const Outcome &out);

/// Utility of a matched pair under the relaxed (closed-cap) semantics used
/// by check_relaxed_stable; requires p[j] <= m[i][j].
Rat relaxed_matched_utility(const Instance &inst, int bidder, int item, const Rat &pj);

enum class Dominance {
  Equal,           // u(a) == u(b) pointwise
  GreaterOrEqual,  // u(a) >= u(b) pointwise, strict somewhere
  LessOrEqual,     // u(a) <= u(b) pointwise, strict somewhere
  Incomparable,
};

/// Compares two outcomes of the same market bidder-by-bidder.
Dominance dominates(const Outcome &a, const Outcome &b);

std::string to_string(Dominance d);

}  // namespace market
