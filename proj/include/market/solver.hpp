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
#include <variant>
#include <vector>

#include "market/choice_graph.hpp"
#include "market/instance.hpp"

namespace market {

enum class DeltaKind { Out, Res, Max };

/// The three candidate price increments of one inner-loop step and their
/// minimum. A category with no candidate pairs is +infinity. For a
/// well-formed solver state (tree without augmenting path) the minimum is
/// finite and strictly positive: the dummy always bounds delta_out.
struct DeltaBreakdown {
  Ceiling delta_out = Ceiling::infinity();
  Ceiling delta_res = Ceiling::infinity();
  Ceiling delta_max = Ceiling::infinity();
  Ceiling delta = Ceiling::infinity();
  std::vector<std::pair<int, int>> argmin_out, argmin_res, argmin_max;

  bool res_fired() const { return delta == delta_res && !argmin_res.empty(); }
  bool max_fired() const { return delta == delta_max && !argmin_max.empty(); }
  DeltaKind primary_kind() const;
};

/// Candidate sets, with `tree_bidders` as T:
///   delta_out: pairs (i, j) with j not a first choice of i, j outside the
///              raised set F_p(T), and p_j still below m[i][j]. Pairs inside
///              F_p(T) rise with u_i, so their slack never closes; pairs at
///              or above the maximum price can never become desirable.
///              Both kinds are excluded or the increment could stall at a
///              frozen value (or go negative).
///   delta_res: pairs with j a first choice of i but below i's reserve.
///   delta_max: pairs with j a first choice of i and a finite maximum price.
DeltaBreakdown compute_delta(const Instance &inst, const ChoiceGraphs &g,
                             const std::vector<Rat> &prices,
                             const std::vector<int> &tree_bidders);

/// Sorted union of the tree bidders' first-choice items (the raise set).
/// Never contains the dummy while the inner loop runs.
std::vector<int> first_choice_items(const ChoiceGraphs &g,
                                    const std::vector<int> &tree_bidders);

struct DroppedEdge {
  int bidder;
  int item;
  bool max_price_hit;  // false: the edge left the feasible first choice graph
};

/// Raises the prices of `raised_items` by delta, then removes every matched
/// edge that is no longer a feasible first choice at the new prices (the
/// pair's maximum price was reached, or a cheaper item overtook it).
/// Returns the removed edges in bidder order.
std::vector<DroppedEdge> apply_price_update(const Instance &inst, std::vector<Rat> &prices,
                                            Matching &matching,
                                            const std::vector<int> &raised_items,
                                            const Rat &delta);

// --- trace -----------------------------------------------------------------

struct TreeBuilt { int root; };
struct DeltaComputed { Rat delta; DeltaKind kind; };
struct PricesRaised { std::vector<int> items; };
struct EdgeDropped { int bidder; int item; bool max_price_hit; };
struct Augmented { int bidder; int item; };  // root bidder and terminal item

using TraceEvent = std::variant<TreeBuilt, DeltaComputed, PricesRaised, EdgeDropped, Augmented>;

std::string to_string(const TraceEvent &event);

// --- engines ----------------------------------------------------------------

struct SolverCounters {
  long outer_iterations = 0;
  long inner_iterations = 0;
  long special_executions = 0;
  long heap_removals = 0;  // pops from the three offset heaps (fast engine)
  long peak_heap_removals_between_specials = 0;
};

struct SolveResult {
  Outcome outcome;
  SolverCounters counters;
  std::vector<TraceEvent> trace;
};

struct SolveOptions {
  bool collect_trace = false;
};

/// Direct transcription of the price-ascent matching loop: start at zero
/// prices, repeatedly grow a maximal alternating tree from the lowest
/// unmatched bidder, raise prices by the minimum increment until the tree
/// reaches the dummy or an unmatched item, then augment. Deterministic;
/// recomputes utilities for all bidders after every raise.
SolveResult solve_simple(const Instance &inst, const SolveOptions &opts = {});

/// Same outputs as solve_simple, produced with the amortized machinery:
/// bit-vector-backed T / S / F_p(T), three min-heaps whose keys are read
/// through a lazily accumulated offset, full O(k^2) rebuilds at special
/// executions and breadth-first tree extension in between.
SolveResult solve_fast(const Instance &inst, const SolveOptions &opts = {});

/// Event log of a solve_simple run; enough to replay and audit the run.
std::vector<TraceEvent> solver_trace(const Instance &inst);

}  // namespace market
