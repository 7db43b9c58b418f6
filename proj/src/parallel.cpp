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

#include "mapchange/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mapchange
{

void configure_threads_from_env()
{
  const char * value = std::getenv("MAPCHANGE_THREADS");
  if (value == nullptr) {
    return;
  }
  try {
    const int n = std::stoi(value);
#ifdef _OPENMP
    if (n > 0) {
      omp_set_num_threads(n);
    }
#else
    (void)n;
#endif
  } catch (const std::exception &) {
    // Ignored: the variable only tunes performance.
  }
}

int max_threads()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mapchange
