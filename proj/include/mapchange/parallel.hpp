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

#ifndef MAPCHANGE__PARALLEL_HPP_
#define MAPCHANGE__PARALLEL_HPP_

#include <cstdint>

namespace mapchange
{

/// Selects between the OpenMP kernels and the serial reference path.
/// Both produce identical results; the serial path is kept for tests and
/// benchmarks.
enum class ExecutionPolicy : std::uint8_t { Serial, Parallel };

/// Applies MAPCHANGE_THREADS (if set) to the OpenMP runtime.
void configure_threads_from_env();

int max_threads();

}  // namespace mapchange

#endif  // MAPCHANGE__PARALLEL_HPP_
