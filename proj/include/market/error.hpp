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

#include <stdexcept>
#include <string>

namespace market {

/// Caller handed us something outside the documented contract (bad index,
/// malformed file, capacity exceeded, ...). Maps to exit code 2 in the CLI.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};

/// A solver invariant failed. This is a bug, never a data problem.
/// Maps to exit code 3 in the CLI.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

}  // namespace market
