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

#ifndef MAPCHANGE__CONFIG_IO_HPP_
#define MAPCHANGE__CONFIG_IO_HPP_

#include "mapchange/change_synthesis.hpp"
#include "mapchange/json_io.hpp"
#include "mapchange/metrics.hpp"
#include "mapchange/simulator.hpp"

namespace mapchange
{

// Config files use the struct field names verbatim. Missing fields keep
// their defaults; unknown fields are a SchemaError.

Json to_json(const EvalConfig & cfg);
EvalConfig eval_config_from_json(const Json & doc);

Json to_json(const PerturbationConfig & cfg);
PerturbationConfig perturbation_config_from_json(const Json & doc);

Json to_json(const NoiseConfig & cfg);
NoiseConfig noise_config_from_json(const Json & doc);

}  // namespace mapchange

#endif  // MAPCHANGE__CONFIG_IO_HPP_
