// Copyright 2026 The mapchange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAPCHANGE__CLI_HPP_
#define MAPCHANGE__CLI_HPP_

#include <iosfwd>

namespace mapchange
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `mapchange` binary. Subcommands: evaluate,
/// perturb, simulate, render, validate, encode.
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace mapchange

#endif  // MAPCHANGE__CLI_HPP_
