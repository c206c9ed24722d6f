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

#include <optional>
#include <vector>

#include "market/instance.hpp"

namespace market {

/// First-choice structure of a market at a given price vector.
/// fp[i] is the set of items attaining bidder i's best utility (sorted,
/// always nonempty: the dummy yields 0 at price 0). fp_feasible[i] keeps the
/// first choices whose price has reached the bidder's reserve.
struct ChoiceGraphs {
  std::vector<std::vector<int>> fp;
  std::vector<std::vector<int>> fp_feasible;
  std::vector<Utility> best_utility;  // always finite, >= 0

  bool in_fp(int bidder, int item) const;
  bool in_fp_feasible(int bidder, int item) const;
};

/// Requires prices of length k+1 with prices[0] == 0 and no negative entry.
ChoiceGraphs build_choice_graphs(const Instance &inst, const std::vector<Rat> &prices);

/// One forward (currently unmatched) edge of an alternating path; the
/// matched edges between consecutive forward edges are implied.
struct PathEdge {
  int bidder;
  int item;
  friend bool operator==(const PathEdge &a, const PathEdge &b) {
    return a.bidder == b.bidder && a.item == b.item;
  }
};

/// Breadth-first alternating tree over the feasible first choice graph,
/// rooted at an unassigned bidder. If the tree reaches the dummy or an
/// unmatched item, augmenting_path holds the shortest such path (ties broken
/// by lowest item index, then lowest bidder index) and bidders/items cover
/// only what was grown before the hit. Otherwise the tree is maximal: every
/// item in it is matched, the dummy is absent, and each tree bidder's
/// feasible first choices all lie inside the tree.
struct AlternatingTree {
  int root = -1;
  std::vector<int> bidders;  // T, in discovery order (root first)
  std::vector<int> items;    // S, in discovery order
  std::vector<int> item_parent;    // size k+1; tree bidder that reached the item
  std::vector<int> bidder_parent;  // size n; item whose owner the bidder is
  std::optional<std::vector<PathEdge>> augmenting_path;
};

AlternatingTree maximal_alternating_tree(const ChoiceGraphs &g, const Matching &matching,
                                         int root);

/// Flips the path's edges: forward edges become matched, the matched edges
/// between them become unmatched. Exactly one more bidder ends up assigned.
/// Throws UsageError on a malformed path.
Matching augment(const Matching &matching, const std::vector<PathEdge> &path);

/// True iff (i) every tree bidder's feasible first choices lie inside
/// `items` and (ii) every nonempty subset of `items` has strictly more
/// feasible-first-choice demanders within `bidders` than it has items.
/// Exhaustive subset check, |items| <= 20; the dummy may not appear.
bool is_strictly_overdemanded(const ChoiceGraphs &g, const std::vector<int> &items,
                              const std::vector<int> &bidders);

}  // namespace market
