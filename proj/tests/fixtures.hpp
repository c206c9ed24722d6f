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

namespace market::fixtures {

// Three bidders, two items. Bidder 1 wants both items equally but has a
// reserve of 2 on each; bidders 0 and 2 want one item each. The two relaxed
// notions of "best" pull apart here: no relaxed bidder optimum exists, while
// the strict bidder optimum is prices (2,2) with bidder 1 on item 1.
inline Instance duo_items() {
  return Instance::make_int(3, 2,
                            {{1, 0},   // bidder 0: only item 1
                             {4, 4},   // bidder 1: both items
                             {0, 1}},  // bidder 2: only item 2
                            {{0, 0}, {2, 2}, {0, 0}},
                            {{-1, -1}, {-1, -1}, {-1, -1}});
}

// Two bidders, one item, equal valuations 10 and a shared maximum price of
// 5: the price war stops exactly at the cap, nobody gets the item, and the
// strict bidder optimum is the empty matching at price 5.
inline Instance capped_duel() {
  return Instance::make_int(2, 1, {{10}, {10}}, {{0}, {0}}, {{5}, {5}});
}

inline Outcome outcome_of(const Instance &inst, std::vector<int> assignment,
                          std::vector<long> prices_without_dummy) {
  std::vector<Rat> p{Rat(0)};
  for (long x : prices_without_dummy) p.push_back(Rat(x));
  return Outcome::make(inst, std::move(assignment), std::move(p));
}

}  // namespace market::fixtures
