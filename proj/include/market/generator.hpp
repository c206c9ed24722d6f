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

#include <cstdint>
#include <random>

#include "market/instance.hpp"

namespace market {

/// Seeded integer-market generator used by fuzzing. Valuations are uniform
/// on {0..max_value}; reserves are 0 half the time and uniform otherwise;
/// maximum prices are infinite with probability 7/10 and uniform on
/// {1..max_value} otherwise. Duplicate values are common on purpose: tie
/// handling is the point of this solver.
class InstanceGenerator {
public:
  InstanceGenerator(std::uint64_t seed, int bidders, int items, long max_value)
      : rng_(seed), n_(bidders), k_(items), max_(max_value) {
    if (bidders < 0 || items < 0 || max_value < 1)
      throw UsageError("generator needs nonnegative sizes and max_value >= 1");
  }

  Instance next() {
    std::vector<std::vector<long>> v(n_, std::vector<long>(k_));
    std::vector<std::vector<long>> r(n_, std::vector<long>(k_));
    std::vector<std::vector<long>> m(n_, std::vector<long>(k_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < k_; ++j) {
        v[i][j] = below(max_ + 1);
        r[i][j] = below(2) == 0 ? 0 : below(max_ + 1);
        m[i][j] = below(10) < 7 ? -1 : 1 + below(max_);  // -1 encodes infinity
      }
    return Instance::make_int(n_, k_, v, r, m);
  }

private:
  long below(long bound) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(bound)); }

  std::mt19937_64 rng_;
  int n_, k_;
  long max_;
};

}  // namespace market
