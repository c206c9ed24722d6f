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

/// Exhaustive ground truth for small integer markets: every stable outcome
/// over the integer price grid {0..bound}^k. Integer grids suffice because
/// integer data keeps every solver price integral, and prices never exceed
/// the largest finite input value.
struct StableSet {
  std::vector<Outcome> outcomes;  // each passes check_stable
  long price_bound = 0;
  std::vector<Rat> per_bidder_max_utility;
  /// The price vector (dummy included) that is pointwise minimal across all
  /// enumerated stable outcomes, present iff some outcome attains it.
  std::optional<std::vector<Rat>> min_prices;
};

/// Largest finite entry among v, r, m (at least 0); the default and minimum
/// admissible grid bound.
long default_price_bound(const Instance &inst);

/// Requires integer data and n <= 5, k <= 3. bound < 0 selects the default.
/// Throws UsageError on capacity, non-integer data, or an insufficient bound.
StableSet enumerate_stable(const Instance &inst, long bound = -1);

/// Zero violations iff `out` is stable, its prices are pointwise <= every
/// enumerated stable price vector, and its utilities match the per-bidder
/// maxima over the stable set.
Report assert_bidder_optimal(const Instance &inst, const Outcome &out, const StableSet &s);

/// An outcome under the relaxed (closed-cap) semantics together with its
/// relaxed utility vector; Outcome::utilities would read -infinity for a
/// pair sitting exactly at its maximum price, the vector here reads v - p.
struct RelaxedOutcome {
  Outcome outcome;
  std::vector<Rat> utilities;
};

/// All relaxed-stable outcomes over the grid whose utility vectors no other
/// relaxed-stable outcome strictly dominates. On markets without a bidder
/// optimum the frontier holds mutually incomparable profiles.
std::vector<RelaxedOutcome> relaxed_pareto_frontier(const Instance &inst, long bound = -1);

/// Uniformly scales all monetary data by a positive rational; utilities and
/// stable prices scale along with it, argmax structure is preserved.
Instance scale_instance(const Instance &inst, const Rat &factor);

}  // namespace market
