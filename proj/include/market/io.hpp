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
#include <string>

#include "market/instance.hpp"
#include "market/reduction.hpp"
#include "market/solver.hpp"

namespace market {

/// A parsed instance document. Files carry n x k matrices (the dummy column
/// is implicit); rationals are JSON integers or "a/b" strings, and "inf" is
/// the one infinity literal. Scale fields mark a generalized market.
struct InstanceFile {
  Instance instance;
  std::optional<std::vector<Rat>> bidder_scale;  // size n when present
  std::optional<std::vector<Rat>> item_scale;    // size k when present

  bool is_generalized() const { return bidder_scale || item_scale; }
  /// Missing scale vectors default to all ones.
  GeneralizedInstance generalized() const;
};

/// Throws UsageError with field diagnostics on malformed input.
InstanceFile parse_instance(const std::string &text);

std::string emit_instance(const Instance &inst);
std::string emit_instance(const GeneralizedInstance &g);

/// Outcome documents: matching as [bidder, item] pairs (dummy omitted),
/// prices and utilities without the dummy entry, the engine name, and the
/// solver counters.
std::string emit_outcome(const Instance &inst, const SolveResult &result,
                         const std::string &engine);

/// Reads the matching/prices back into an Outcome for checking.
Outcome parse_outcome(const Instance &inst, const std::string &text);

}  // namespace market
