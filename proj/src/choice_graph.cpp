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

#include "market/choice_graph.hpp"

#include <algorithm>

namespace market {

namespace {

bool contains(const std::vector<int> &sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

bool ChoiceGraphs::in_fp(int bidder, int item) const { return contains(fp[bidder], item); }

bool ChoiceGraphs::in_fp_feasible(int bidder, int item) const {
  return contains(fp_feasible[bidder], item);
}

ChoiceGraphs build_choice_graphs(const Instance &inst, const std::vector<Rat> &prices) {
  if (static_cast<int>(prices.size()) != inst.items_with_dummy())
    throw UsageError("price vector has wrong length");
  if (prices[0] != Rat(0)) throw UsageError("dummy price must be 0");
  for (const Rat &p : prices)
    if (p < Rat(0)) throw UsageError("prices must be nonnegative");

  ChoiceGraphs g;
  g.fp.assign(inst.n, {});
  g.fp_feasible.assign(inst.n, {});
  g.best_utility.assign(inst.n, Utility::finite(Rat(0)));
  for (int i = 0; i < inst.n; ++i) {
    Utility best = Utility::minus_infinity();
    for (int j = 0; j <= inst.k; ++j) {
      Utility u = utility(inst, i, j, prices[j]);
      if (u > best) best = u;
    }
    // The dummy is admissible at price 0, so the best utility is finite.
    g.best_utility[i] = best;
    for (int j = 0; j <= inst.k; ++j) {
      if (utility(inst, i, j, prices[j]) != best) continue;
      g.fp[i].push_back(j);
      if (prices[j] >= inst.r[i][j]) g.fp_feasible[i].push_back(j);
    }
  }
  return g;
}

AlternatingTree maximal_alternating_tree(const ChoiceGraphs &g, const Matching &matching,
                                         int root) {
  int n = static_cast<int>(g.fp.size());
  int items_with_dummy = static_cast<int>(matching.owner_of.size());
  if (root < 0 || root >= n) throw UsageError("root bidder out of range");
  if (matching.assigned(root)) throw UsageError("root bidder must be unassigned");

  AlternatingTree tree;
  tree.root = root;
  tree.item_parent.assign(items_with_dummy, -1);
  tree.bidder_parent.assign(n, -1);

  std::vector<bool> in_t(n, false), in_s(items_with_dummy, false);
  std::vector<int> frontier{root};
  in_t[root] = true;
  tree.bidders.push_back(root);

  auto extract_path = [&](int terminal, int parent) {
    std::vector<PathEdge> path;
    int item = terminal, bidder = parent;
    while (true) {
      path.push_back({bidder, item});
      if (bidder == root) break;
      item = matching.item_of[bidder];
      bidder = tree.item_parent[item];
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!frontier.empty()) {
    // Gather this level's new items in ascending order, each with the
    // lowest-index adjacent frontier bidder as parent.
    std::vector<std::pair<int, int>> new_items;  // (item, parent bidder)
    for (int j = 0; j < items_with_dummy; ++j) {
      if (in_s[j]) continue;
      int parent = -1;
      for (int i : frontier)
        if (g.in_fp_feasible(i, j) && (parent == -1 || i < parent)) parent = i;
      if (parent >= 0) new_items.emplace_back(j, parent);
    }

    // Terminal scan first: the dummy (index 0) or any unmatched item ends
    // the search; ascending item order realizes the tie-break.
    for (auto [j, parent] : new_items)
      if (j == 0 || matching.owner_of[j] < 0) {
        tree.augmenting_path = extract_path(j, parent);
        return tree;
      }

    std::vector<int> next;
    for (auto [j, parent] : new_items) {
      in_s[j] = true;
      tree.items.push_back(j);
      tree.item_parent[j] = parent;
      int owner = matching.owner_of[j];
      if (!in_t[owner]) {
        in_t[owner] = true;
        tree.bidders.push_back(owner);
        tree.bidder_parent[owner] = j;
        next.push_back(owner);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return tree;
}

Matching augment(const Matching &matching, const std::vector<PathEdge> &path) {
  if (path.empty()) throw UsageError("augmenting path is empty");
  int n = static_cast<int>(matching.item_of.size());
  int items_with_dummy = static_cast<int>(matching.owner_of.size());

  for (std::size_t s = 0; s < path.size(); ++s) {
    const auto &[bidder, item] = path[s];
    if (bidder < 0 || bidder >= n || item < 0 || item >= items_with_dummy)
      throw UsageError("path edge out of range");
    if (s == 0) {
      if (matching.assigned(bidder) && matching.item_of[bidder] != 0)
        throw UsageError("path must start at an unmatched bidder");
    } else {
      // The implied matched edge: this bidder currently owns the previous
      // forward edge's item.
      if (matching.item_of[bidder] != path[s - 1].item || path[s - 1].item == 0)
        throw UsageError("path does not alternate with the current matching");
    }
  }
  int last = path.back().item;
  if (last != 0 && matching.owner_of[last] >= 0 &&
      matching.owner_of[last] != path.back().bidder)
    throw UsageError("path must end at the dummy or an unmatched item");

  Matching out = matching;
  for (const auto &[bidder, item] : path) out.assign(bidder, item);
  return out;
}

bool is_strictly_overdemanded(const ChoiceGraphs &g, const std::vector<int> &items,
                              const std::vector<int> &bidders) {
  if (items.size() > 20) throw UsageError("overdemand check limited to 20 items");
  for (int j : items)
    if (j == 0) throw UsageError("overdemand set may not contain the dummy");

  // (i) all feasible first choices of the bidder set stay inside the items.
  for (int i : bidders)
    for (int j : g.fp_feasible[i])
      if (std::find(items.begin(), items.end(), j) == items.end()) return false;

  // (ii) every nonempty subset R has |demanders in T| > |R|.
  int s = static_cast<int>(items.size());
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    int demanders = 0;
    for (int i : bidders) {
      bool hits = false;
      for (int b = 0; b < s && !hits; ++b)
        if ((mask >> b) & 1u) hits = g.in_fp_feasible(i, items[b]);
      demanders += hits ? 1 : 0;
    }
    if (demanders <= __builtin_popcount(mask)) return false;
  }
  return true;
}

}  // namespace market
