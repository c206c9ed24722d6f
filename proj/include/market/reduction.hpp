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

#include <vector>

#include "market/instance.hpp"

namespace market {

/// Market with generalized linear utilities u[i][j](p) = v[i][j] - c_i*c_j*p
/// below the maximum price. c_i is a per-bidder scale, c_j a per-item scale;
/// both strictly positive, and the dummy's item scale is pinned to 1 so its
/// zero price survives the reduction.
struct GeneralizedInstance {
  Instance base;                  // hatted matrices, dummy column included
  std::vector<Rat> bidder_scale;  // size n
  std::vector<Rat> item_scale;    // size k+1, item_scale[0] == 1

  /// item_scales excludes the dummy. Throws UsageError on a nonpositive
  /// scale or a shape mismatch.
  static GeneralizedInstance make(Instance base, std::vector<Rat> bidder_scales,
                                  std::vector<Rat> item_scales);
};

/// The standard-market image: v = v̂/c_i, r = c_j*r̂, m = c_j*m̂ (infinity
/// stays infinite). Bidder-optimal outcomes of the image lift back to
/// bidder-optimal generalized outcomes and vice versa.
Instance reduce(const GeneralizedInstance &g);

/// An outcome in generalized units. Utilities use the generalized formula,
/// so this is deliberately a distinct type from Outcome.
struct GeneralizedOutcome {
  std::vector<int> assignment;
  std::vector<Rat> prices;          // hatted prices, size k+1, [0] == 0
  std::vector<Utility> utilities;   // hatted utilities
};

/// Maps an outcome of reduce(g) back: p̂ = p/c_j, û = c_i * u, matching
/// unchanged.
GeneralizedOutcome lift_outcome(const GeneralizedInstance &g, const Outcome &out);

/// Feasibility and stability evaluated directly under the generalized
/// utility formula; zero violations exactly when the reduced outcome is
/// stable in the standard market.
Report check_generalized_stable(const GeneralizedInstance &g, const GeneralizedOutcome &out);

/// Generalized utility of one pair at a hatted price.
Utility generalized_utility(const GeneralizedInstance &g, int bidder, int item,
                            const Rat &price);

}  // namespace market
