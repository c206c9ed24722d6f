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

#include <algorithm>
#include <sstream>

#include "market/solver.hpp"

namespace market {

DeltaKind DeltaBreakdown::primary_kind() const {
  if (delta == delta_out && !argmin_out.empty()) return DeltaKind::Out;
  if (res_fired()) return DeltaKind::Res;
  return DeltaKind::Max;
}

DeltaBreakdown compute_delta(const Instance &inst, const ChoiceGraphs &g,
                             const std::vector<Rat> &prices,
                             const std::vector<int> &tree_bidders) {
  std::vector<bool> raised(inst.items_with_dummy(), false);
  for (int j : first_choice_items(g, tree_bidders)) raised[j] = true;

  DeltaBreakdown d;
  auto consider = [](Ceiling &best, std::vector<std::pair<int, int>> &arg, const Rat &value,
                     int i, int j) {
    Ceiling c = Ceiling::finite(value);
    if (c < best) {
      best = c;
      arg.assign(1, {i, j});
    } else if (c == best) {
      arg.emplace_back(i, j);
    }
  };

  for (int i : tree_bidders) {
    const Rat &ui = g.best_utility[i].finite_value();
    std::size_t next_fp = 0;
    for (int j = 0; j <= inst.k; ++j) {
      bool is_fp = next_fp < g.fp[i].size() && g.fp[i][next_fp] == j;
      if (is_fp) ++next_fp;
      if (!is_fp) {
        if (raised[j] || prices[j] >= inst.m[i][j]) continue;
        consider(d.delta_out, d.argmin_out, ui + prices[j] - inst.v[i][j], i, j);
      } else {
        if (prices[j] < inst.r[i][j])
          consider(d.delta_res, d.argmin_res, inst.r[i][j] - prices[j], i, j);
        if (inst.m[i][j].is_finite())
          consider(d.delta_max, d.argmin_max, inst.m[i][j].finite_value() - prices[j], i, j);
      }
    }
  }
  d.delta = min(d.delta_out, min(d.delta_res, d.delta_max));
  return d;
}

std::vector<int> first_choice_items(const ChoiceGraphs &g,
                                    const std::vector<int> &tree_bidders) {
  std::vector<int> items;
  for (int i : tree_bidders) items.insert(items.end(), g.fp[i].begin(), g.fp[i].end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::vector<DroppedEdge> apply_price_update(const Instance &inst, std::vector<Rat> &prices,
                                            Matching &matching,
                                            const std::vector<int> &raised_items,
                                            const Rat &delta) {
  if (!(delta > Rat(0))) throw UsageError("price increment must be positive");
  for (int j : raised_items) {
    if (j <= 0 || j > inst.k) throw UsageError("cannot raise that item's price");
    prices[j] += delta;
  }

  ChoiceGraphs g = build_choice_graphs(inst, prices);
  std::vector<DroppedEdge> dropped;
  for (auto [i, j] : matching.real_pairs()) {
    if (g.in_fp_feasible(i, j)) continue;
    dropped.push_back({i, j, prices[j] >= inst.m[i][j]});
    matching.unassign(i);
  }
  return dropped;
}

namespace {

class SimpleEngine {
public:
  SimpleEngine(const Instance &inst, const SolveOptions &opts) : inst_(inst), opts_(opts) {}

  SolveResult run() {
    prices_.assign(inst_.items_with_dummy(), Rat(0));
    Matching mu = Matching::empty(inst_.n, inst_.k);
    const std::vector<Rat> price_cap = price_caps(inst_);
    const long iteration_limit = hang_guard(inst_);

    while (true) {
      int root = -1;
      for (int i = 0; i < inst_.n; ++i)
        if (!mu.assigned(i)) { root = i; break; }
      if (root < 0) break;

      ++counters_.outer_iterations;

      ChoiceGraphs g = build_choice_graphs(inst_, prices_);
      AlternatingTree tree = maximal_alternating_tree(g, mu, root);
      bool fresh_tree = true;

      while (!tree.augmenting_path) {
        ++counters_.inner_iterations;
        if (fresh_tree) ++counters_.special_executions;
        if (opts_.collect_trace && fresh_tree) trace_.emplace_back(TreeBuilt{root});

        DeltaBreakdown d = compute_delta(inst_, g, prices_, tree.bidders);
        if (!d.delta.is_finite() || !(d.delta.finite_value() > Rat(0)))
          throw InternalError("price increment not finite positive");
        const Rat delta = d.delta.finite_value();
        fresh_tree = d.res_fired() || d.max_fired();
        if (opts_.collect_trace)
          trace_.emplace_back(DeltaComputed{delta, d.primary_kind()});

        std::vector<int> raise = first_choice_items(g, tree.bidders);
        auto dropped = apply_price_update(inst_, prices_, mu, raise, delta);
        if (opts_.collect_trace) {
          trace_.emplace_back(PricesRaised{raise});
          for (const auto &e : dropped)
            trace_.emplace_back(EdgeDropped{e.bidder, e.item, e.max_price_hit});
        }

        g = build_choice_graphs(inst_, prices_);
        tree = maximal_alternating_tree(g, mu, root);
      }

      mu = augment(mu, *tree.augmenting_path);
      if (opts_.collect_trace)
        trace_.emplace_back(Augmented{root, tree.augmenting_path->back().item});
    }

    std::vector<int> assignment(mu.item_of);
    for (int &j : assignment)
      if (j < 0) j = 0;
    SolveResult result{Outcome::make(inst_, std::move(assignment), prices_), counters_,
                       std::move(trace_)};
    return result;
  }

private:
  const Instance &inst_;
  SolveOptions opts_;
  std::vector<Rat> prices_;
  SolverCounters counters_;
  std::vector<TraceEvent> trace_;
};

}  // namespace

SolveResult solve_simple(const Instance &inst, const SolveOptions &opts) {
  return SimpleEngine(inst, opts).run();
}

std::vector<TraceEvent> solver_trace(const Instance &inst) {
  SolveOptions opts;
  opts.collect_trace = true;
  return solve_simple(inst, opts).trace;
}

std::string to_string(const TraceEvent &event) {
  std::ostringstream os;
  auto item_name = [](int j) { return j == 0 ? std::string("j0") : "item" + std::to_string(j); };
  std::visit(
      [&](const auto &e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, TreeBuilt>) {
          os << "TreeBuilt(root " << e.root << ")";
        } else if constexpr (std::is_same_v<T, DeltaComputed>) {
          const char *kind = e.kind == DeltaKind::Out ? "out"
                             : e.kind == DeltaKind::Res ? "res"
                                                        : "max";
          os << "DeltaComputed(" << e.delta.str() << ", " << kind << ")";
        } else if constexpr (std::is_same_v<T, PricesRaised>) {
          os << "PricesRaised({";
          for (std::size_t b = 0; b < e.items.size(); ++b)
            os << (b ? "," : "") << e.items[b];
          os << "})";
        } else if constexpr (std::is_same_v<T, EdgeDropped>) {
          os << "EdgeDropped(" << e.bidder << ", " << item_name(e.item)
             << (e.max_price_hit ? ", max-price" : ", left-first-choice") << ")";
        } else if constexpr (std::is_same_v<T, Augmented>) {
          os << "Augmented(" << e.bidder << ", " << item_name(e.item) << ")";
        }
      },
      event);
  return os.str();
}

}  // namespace market
