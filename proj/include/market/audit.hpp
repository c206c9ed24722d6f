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

#include "market/solver.hpp"

namespace market {

/// Replays a solver event log and reports every violated run invariant:
/// price increments must be positive, the dummy is never raised, prices are
/// pointwise nondecreasing and stay integral on integer input, every dropped
/// edge coincides with its maximum price being reached or with leaving the
/// feasible first choice graph, no pair drops twice, and the replayed prices
/// end at the outcome's prices.
Report audit_trace(const Instance &inst, const SolveResult &result);

bool has_integer_data(const Instance &inst);

}  // namespace market
