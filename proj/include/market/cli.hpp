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

#include <iosfwd>
#include <string>
#include <vector>

namespace market {

/// Exit codes: 0 success / clean check, 1 failed check or assertion,
/// 2 input or usage error, 3 internal invariant failure.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

int run_cli(int argc, char **argv);

}  // namespace market
