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

#include <functional>
#include <optional>
#include <vector>

#include "market/instance.hpp"

namespace market {

/// A profitable single-coordinate lie: reporting `reported_value` instead of
/// the true valuation at (bidder, item) strictly raises the bidder's true
/// utility under the bidder-optimal mechanism.
struct MisreportResult {
  Instance instance;  // the true market
  int bidder = -1;
  int item = -1;
  Rat reported_value;
  Rat true_utility_honest;
  Rat true_utility_lying;
};

/// Solves the reported market and evaluates the bidder's true utility at her
/// assigned item and the computed price. `reported` may differ from `inst`
/// only in that bidder's valuation row.
Utility utility_under_report(const Instance &inst, int bidder, const Instance &reported);

/// Throws UsageError unless the instance satisfies the restricted family:
/// (i) all reserves zero, (ii) each bidder's maximum price constant across
/// items, (iii) no two bidders sharing a maximum price.
void validate_restricted_family(const Instance &inst);

/// Pulls instances from `next_instance` until it returns nullopt; for each,
/// tries every single-coordinate valuation misreport over `grid` and returns
/// the first strictly profitable one (ordered by bidder, then item, then
/// grid position: the lexicographically first hit). With `restricted` set,
/// every generated instance must satisfy the family restrictions.
std::optional<MisreportResult> find_profitable_misreport(
    const std::function<std::optional<Instance>()> &next_instance,
    const std::vector<Rat> &grid, bool restricted = true);

/// Single-instance search, optionally pinned to one bidder.
std::optional<MisreportResult> find_profitable_misreport_in(
    const Instance &inst, const std::vector<Rat> &grid,
    std::optional<int> bidder = std::nullopt);

}  // namespace market
