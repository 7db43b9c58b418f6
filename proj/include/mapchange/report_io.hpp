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

#ifndef MAPCHANGE__REPORT_IO_HPP_
#define MAPCHANGE__REPORT_IO_HPP_

#include <string>
#include <vector>

#include "mapchange/json_io.hpp"
#include "mapchange/metrics.hpp"

namespace mapchange
{

inline constexpr const char * kReportSchemaVersion = "1.0";

Json report_to_json(const EvalReport & report);

/// One table line per report row, in the layout
/// strategy | modality | change class | parameter | object type | values.
std::string report_to_markdown(const EvalReport & report);

/// Structural check of a report document. Returns one message per problem;
/// empty when the document conforms.
std::vector<std::string> validate_report_json(const Json & doc);

}  // namespace mapchange

#endif  // MAPCHANGE__REPORT_IO_HPP_
