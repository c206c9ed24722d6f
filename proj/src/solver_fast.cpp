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
#include <optional>
#include <queue>
#include <vector>

#include "market/solver.hpp"

namespace market {

namespace {

struct PairEntry {
  Rat key;
  int i, j;
};
struct ItemEntry {
  Rat key;
  int item;
  long gen;
};
template <typename E>
struct KeyGreater {
  bool operator()(const E &a, const E &b) const { return a.key > b.key; }
};
template <typename E>
using MinHeap = std::priority_queue<E, std::vector<E>, KeyGreater<E>>;

/// Matched bidder outside the tree whose item is being raised. `threshold`
/// is her best utility over items outside F_p(T); those prices are frozen
/// until the next rebuild, so once her matched utility falls strictly below
/// the threshold (or the price reaches her maximum) the edge leaves the
/// feasible first choice graph and must be dropped.
struct Victim {
  int bidder = -1;
  Rat threshold;
  int outside_best = -1;  // item attaining threshold; stale once it joins F_p(T)
  long gen = 0;
  bool alive = false;
};

class FastEngine {
public:
  FastEngine(const Instance &inst, const SolveOptions &opts) : inst_(inst), opts_(opts) {}

  SolveResult run() {
    const int n = inst_.n, K = inst_.items_with_dummy();
    const long outer_limit = static_cast<long>(n) * (2 * inst_.k + 1) + 2;
    prices_.assign(K, Rat(0));
    mu_ = Matching::empty(n, inst_.k);

    in_t_.assign(n, false);
    in_s_.assign(K, false);
    in_fpt_.assign(K, false);
    item_parent_.assign(K, -1);
    item_level_.assign(K, -1);
    bidder_parent_.assign(n, -1);
    bidder_level_.assign(n, -1);
    u_adj_.assign(n, Rat(0));
    victims_.assign(K, Victim{});

    while (true) {
      int root = -1;
      for (int i = 0; i < n; ++i)
        if (!mu_.assigned(i)) { root = i; break; }
      if (root < 0) break;

      if (++counters_.outer_iterations > outer_limit)
        throw InternalError("outer loop exceeded its bound; solver state is corrupt");

      auto path = rebuild(root);
      bool just_rebuilt = true;

      while (!path) {
        ++counters_.inner_iterations;
        const bool special = just_rebuilt;
        just_rebuilt = false;
        if (special) {
          ++counters_.special_executions;
          close_stretch();
        }

        Ceiling dout = live_min_out(special);
        Ceiling dres = top_value(h_res_);
        Ceiling dmax = top_value(h_max_);
        Ceiling delta_c = min(dout, min(dres, dmax));
        if (!delta_c.is_finite() || !(delta_c.finite_value() > Rat(0)))
          throw InternalError("price increment not finite positive");
        const Rat delta = delta_c.finite_value();
        if (opts_.collect_trace) {
          DeltaKind kind = delta_c == dout   ? DeltaKind::Out
                           : delta_c == dres ? DeltaKind::Res
                                             : DeltaKind::Max;
          trace_.emplace_back(DeltaComputed{delta, kind});
        }

        for (int j : fpt_list_) prices_[j] += delta;
        acc_ += delta;
        if (opts_.collect_trace) {
          std::vector<int> raised = fpt_list_;
          std::sort(raised.begin(), raised.end());
          trace_.emplace_back(PricesRaised{std::move(raised)});
        }

        auto out_pops = drain(h_out_, special);
        auto res_pops = drain(h_res_, special);
        auto max_pops = drain(h_max_, special);

        // Maximum-price hits sever matched tree edges.
        for (const auto &e : max_pops)
          if (mu_.item_of[e.i] == e.j) {
            mu_.unassign(e.i);
            if (opts_.collect_trace) trace_.emplace_back(EdgeDropped{e.i, e.j, true});
          }
        process_victim_drops();

        if (!max_pops.empty() || !res_pops.empty()) {
          // A reserve or maximum price was reached: the first choice
          // structure shifts discontinuously, rebuild everything.
          path = rebuild(root);
          just_rebuilt = true;
        } else {
          path = extend(out_pops);
        }
      }

      close_stretch();
      mu_ = augment(mu_, *path);
      if (opts_.collect_trace) trace_.emplace_back(Augmented{root, path->back().item});
    }

    std::vector<int> assignment(mu_.item_of);
    for (int &j : assignment)
      if (j < 0) j = 0;
    return SolveResult{Outcome::make(inst_, std::move(assignment), prices_), counters_,
                       std::move(trace_)};
  }

private:
  using Path = std::optional<std::vector<PathEdge>>;

  // --- O(1) state queries ------------------------------------------------

  /// Tree bidders' utilities fall by delta at every raise; store them offset
  /// by the accumulator so no per-bidder update is needed.
  Rat tree_utility(int i) const { return u_adj_[i] - acc_; }

  bool in_fp(int i, int j) const {
    if (prices_[j] >= inst_.m[i][j]) return false;
    return inst_.v[i][j] - prices_[j] == tree_utility(i);
  }
  bool feasible_edge(int i, int j) const { return prices_[j] >= inst_.r[i][j]; }

  Rat fresh_utility(int i) const {
    Rat best(0);  // the dummy
    for (int j = 1; j <= inst_.k; ++j) {
      if (prices_[j] >= inst_.m[i][j]) continue;
      Rat u = inst_.v[i][j] - prices_[j];
      if (u > best) best = u;
    }
    return best;
  }

  // --- heap plumbing -------------------------------------------------------

  Ceiling top_value(const MinHeap<PairEntry> &h) const {
    return h.empty() ? Ceiling::infinity() : Ceiling::finite(h.top().key - acc_);
  }

  /// H_out entries whose item has joined F_p(T) since insertion are dead:
  /// both sides of their slack now fall in lockstep, so they can never fire.
  Ceiling live_min_out(bool special) {
    while (!h_out_.empty() && in_fpt_[h_out_.top().j]) {
      h_out_.pop();
      count_removal(special);
    }
    return top_value(h_out_);
  }

  std::vector<PairEntry> drain(MinHeap<PairEntry> &h, bool special) {
    const bool is_out = &h == &h_out_;
    std::vector<PairEntry> live;
    while (!h.empty() && h.top().key <= acc_) {
      PairEntry e = h.top();
      h.pop();
      count_removal(special);
      if (is_out && in_fpt_[e.j]) continue;
      if (e.key != acc_) throw InternalError("heap entry fired past its event");
      live.push_back(e);
    }
    return live;
  }

  void count_removal(bool special) {
    ++counters_.heap_removals;
    if (!special) ++stretch_removals_;
  }

  void close_stretch() {
    counters_.peak_heap_removals_between_specials =
        std::max(counters_.peak_heap_removals_between_specials, stretch_removals_);
    stretch_removals_ = 0;
  }

  // --- victims ---------------------------------------------------------------

  /// Best utility of `bidder` over items outside F_p(T), plus which item
  /// attains it (lowest index on ties; the dummy never joins F_p(T) while
  /// the inner loop runs, so the result is at least 0).
  std::pair<Rat, int> outside_best(int bidder) const {
    Rat best(0);
    int arg = 0;
    for (int j = 1; j <= inst_.k; ++j) {
      if (in_fpt_[j] || prices_[j] >= inst_.m[bidder][j]) continue;
      Rat u = inst_.v[bidder][j] - prices_[j];
      if (u > best) { best = u; arg = j; }
    }
    return {best, arg};
  }

  void register_victim(int item) {
    int b = mu_.owner_of[item];
    if (b < 0 || in_t_[b]) return;
    auto [thr, arg] = outside_best(b);
    Rat held = inst_.v[b][item] - prices_[item];
    if (held < thr) throw InternalError("matched edge below the bidder's best utility");
    Victim &v = victims_[item];
    v.bidder = b;
    v.threshold = thr;
    v.outside_best = arg;
    v.gen = ++victim_gen_;
    v.alive = true;
    h_drop_argmax_.push({held - thr + acc_, item, v.gen});
    if (inst_.m[b][item].is_finite())
      h_drop_max_.push({inst_.m[b][item].finite_value() - prices_[item] + acc_, item, v.gen});
  }

  void drop_edge(int item, bool max_hit) {
    Victim &v = victims_[item];
    mu_.unassign(v.bidder);
    v.alive = false;
    if (opts_.collect_trace) trace_.emplace_back(EdgeDropped{v.bidder, item, max_hit});
  }

  void process_victim_drops() {
    while (!h_drop_max_.empty() && h_drop_max_.top().key <= acc_) {
      ItemEntry e = h_drop_max_.top();
      h_drop_max_.pop();
      const Victim &v = victims_[e.item];
      if (!v.alive || v.gen != e.gen) continue;
      drop_edge(e.item, true);
    }
    while (!h_drop_argmax_.empty() && h_drop_argmax_.top().key < acc_) {
      ItemEntry e = h_drop_argmax_.top();
      h_drop_argmax_.pop();
      Victim &v = victims_[e.item];
      if (!v.alive || v.gen != e.gen) continue;
      if (in_fpt_[v.outside_best]) {
        // The recorded outside item has since joined the raised set; the
        // stored slack was an underestimate. Re-measure and re-arm.
        auto [thr, arg] = outside_best(v.bidder);
        v.threshold = thr;
        v.outside_best = arg;
        v.gen = ++victim_gen_;
        Rat held = inst_.v[v.bidder][e.item] - prices_[e.item];
        if (held < thr) {
          drop_edge(e.item, false);
        } else {
          h_drop_argmax_.push({held - thr + acc_, e.item, v.gen});
          if (inst_.m[v.bidder][e.item].is_finite())
            h_drop_max_.push({inst_.m[v.bidder][e.item].finite_value() - prices_[e.item] + acc_,
                              e.item, v.gen});
        }
        continue;
      }
      drop_edge(e.item, false);
    }
  }

  // --- tree construction --------------------------------------------------

  void add_bidder_to_tree(int i, int level) {
    in_t_[i] = true;
    t_list_.push_back(i);
    bidder_level_[i] = level;
    u_adj_[i] = fresh_utility(i) + acc_;
  }

  void place_item(int j, int level, int parent) {
    if (item_level_[j] == -1) touched_items_.push_back(j);
    item_level_[j] = level;
    item_parent_[j] = parent;
  }

  /// Marks the bidder's first choices as raised; matched owners outside the
  /// tree become drop candidates, and reserve / maximum events are armed.
  void absorb_choice_events(int i) {
    const Rat u = tree_utility(i);
    for (int j = 1; j <= inst_.k; ++j) {
      if (prices_[j] >= inst_.m[i][j]) continue;
      if (inst_.v[i][j] - prices_[j] != u) continue;
      if (!in_fpt_[j]) {
        in_fpt_[j] = true;
        fpt_list_.push_back(j);
        register_victim(j);
      }
      if (inst_.m[i][j].is_finite())
        h_max_.push({inst_.m[i][j].finite_value() - prices_[j] + acc_, i, j});
      if (prices_[j] < inst_.r[i][j])
        h_res_.push({inst_.r[i][j] - prices_[j] + acc_, i, j});
    }
  }

  /// Arms the bidder's undesirable pairs: items outside both her first
  /// choices and the raised set, still below their maximum price.
  void absorb_out_events(int i) {
    const Rat u = tree_utility(i);
    for (int j = 1; j <= inst_.k; ++j) {
      if (in_fpt_[j] || prices_[j] >= inst_.m[i][j]) continue;
      if (inst_.v[i][j] - prices_[j] == u) continue;
      h_out_.push({u + prices_[j] - inst_.v[i][j] + acc_, i, j});
    }
    if (u > Rat(0)) h_out_.push({u + acc_, i, 0});  // the dummy
  }

  Path trace_back(int terminal, int parent) const {
    std::vector<PathEdge> path;
    int item = terminal, bidder = parent;
    while (true) {
      path.push_back({bidder, item});
      if (bidder == root_) break;
      item = mu_.item_of[bidder];
      bidder = item_parent_[item];
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Fresh O(k^2) reconstruction at the current prices and matching:
  /// breadth-first maximal alternating tree from the root, then the raised
  /// set, the three offset heaps and the drop candidates.
  Path rebuild(int root) {
    root_ = root;
    for (int i : t_list_) {
      in_t_[i] = false;
      bidder_level_[i] = -1;
      bidder_parent_[i] = -1;
    }
    for (int j : touched_items_) {
      item_level_[j] = -1;
      item_parent_[j] = -1;
    }
    for (int j : s_list_) in_s_[j] = false;
    for (int j : fpt_list_) {
      in_fpt_[j] = false;
      victims_[j].alive = false;
    }
    t_list_.clear();
    s_list_.clear();
    fpt_list_.clear();
    touched_items_.clear();
    h_out_ = {};
    h_res_ = {};
    h_max_ = {};
    h_drop_argmax_ = {};
    h_drop_max_ = {};
    acc_ = Rat(0);

    add_bidder_to_tree(root, 0);
    std::vector<int> frontier{root};
    int level = 0;
    while (!frontier.empty()) {
      std::vector<std::pair<int, int>> new_items;  // (item, parent), ascending
      for (int j = 0; j <= inst_.k; ++j) {
        if (in_s_[j]) continue;
        int parent = -1;
        for (int i : frontier)
          if (in_fp(i, j) && feasible_edge(i, j) && (parent == -1 || i < parent)) parent = i;
        if (parent >= 0) new_items.emplace_back(j, parent);
      }
      for (auto [j, parent] : new_items)
        if (j == 0 || mu_.owner_of[j] < 0) return trace_back(j, parent);

      std::vector<int> next;
      for (auto [j, parent] : new_items) {
        in_s_[j] = true;
        s_list_.push_back(j);
        place_item(j, level + 1, parent);
        int owner = mu_.owner_of[j];
        add_bidder_to_tree(owner, level + 2);
        bidder_parent_[owner] = j;
        next.push_back(owner);
      }
      std::sort(next.begin(), next.end());
      frontier = std::move(next);
      level += 2;
    }

    // Raised set and reserve/maximum events first so the out entries can
    // skip pairs whose slack is frozen from the start.
    for (int i : t_list_) absorb_choice_events(i);
    for (int i : t_list_) absorb_out_events(i);
    return std::nullopt;
  }

  /// Breadth-first extension from the items that just became first choices.
  /// Levels are global, so items attach to their shallowest adjacent tree
  /// bidder (lowest index on ties) exactly as a from-scratch rebuild would
  /// place them.
  Path extend(const std::vector<PairEntry> &out_pops) {
    std::vector<int> pending;
    auto offer = [&](int item, int bidder) {
      int lvl = bidder_level_[bidder] + 1;
      if (item_level_[item] == -1) {
        pending.push_back(item);
        touched_items_.push_back(item);
        item_level_[item] = lvl;
        item_parent_[item] = bidder;
      } else if (lvl < item_level_[item] ||
                 (lvl == item_level_[item] && bidder < item_parent_[item])) {
        item_level_[item] = lvl;
        item_parent_[item] = bidder;
      }
    };

    for (const auto &e : out_pops) {
      // The pair (e.i, e.j) just became a first choice edge.
      if (e.j != 0) {
        if (!in_fpt_[e.j]) {
          in_fpt_[e.j] = true;
          fpt_list_.push_back(e.j);
          register_victim(e.j);
        }
        if (inst_.m[e.i][e.j].is_finite())
          h_max_.push({inst_.m[e.i][e.j].finite_value() - prices_[e.j] + acc_, e.i, e.j});
        if (prices_[e.j] < inst_.r[e.i][e.j]) {
          h_res_.push({inst_.r[e.i][e.j] - prices_[e.j] + acc_, e.i, e.j});
          continue;  // below the reserve: no tree edge yet
        }
      }
      offer(e.j, e.i);
    }

    while (!pending.empty()) {
      int lvl = item_level_[pending.front()];
      for (int j : pending) lvl = std::min(lvl, item_level_[j]);
      std::vector<int> batch, rest;
      for (int j : pending)
        (item_level_[j] == lvl ? batch : rest).push_back(j);
      std::sort(batch.begin(), batch.end());
      pending = std::move(rest);

      for (int j : batch)
        if (j == 0 || mu_.owner_of[j] < 0) return trace_back(j, item_parent_[j]);

      for (int j : batch) {
        in_s_[j] = true;
        s_list_.push_back(j);
        victims_[j].alive = false;  // its owner joins the tree now
        int owner = mu_.owner_of[j];
        add_bidder_to_tree(owner, lvl + 1);
        bidder_parent_[owner] = j;
        absorb_choice_events(owner);
        absorb_out_events(owner);
        for (int jj = 0; jj <= inst_.k; ++jj)
          if (!in_s_[jj] && in_fp(owner, jj) && feasible_edge(owner, jj)) offer(jj, owner);
      }
    }
    return std::nullopt;
  }

  const Instance &inst_;
  SolveOptions opts_;
  std::vector<Rat> prices_;
  Matching mu_;
  SolverCounters counters_;
  std::vector<TraceEvent> trace_;

  int root_ = -1;
  std::vector<char> in_t_, in_s_, in_fpt_;
  std::vector<int> t_list_, s_list_, fpt_list_, touched_items_;
  std::vector<int> item_parent_, item_level_, bidder_parent_, bidder_level_;
  std::vector<Rat> u_adj_;
  Rat acc_;
  MinHeap<PairEntry> h_out_, h_res_, h_max_;
  MinHeap<ItemEntry> h_drop_argmax_, h_drop_max_;
  std::vector<Victim> victims_;
  long victim_gen_ = 0;
  long stretch_removals_ = 0;
};

}  // namespace

SolveResult solve_fast(const Instance &inst, const SolveOptions &opts) {
  return FastEngine(inst, opts).run();
}

}  // namespace market
