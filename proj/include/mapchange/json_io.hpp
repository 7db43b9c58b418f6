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

#ifndef MAPCHANGE__JSON_IO_HPP_
#define MAPCHANGE__JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mapchange/types.hpp"

namespace mapchange
{

using Json = nlohmann::ordered_json;

/// Parses text into a JSON document, converting library errors into
/// ParseError with line/column context.
Json parse_json(std::string_view text);

/// Pretty-printed with a trailing newline. Doubles use shortest round-trip
/// formatting, which is at least as precise as 9 significant digits.
std::string dump_json(const Json & doc);

// Field-level helpers. `path` names the location for SchemaError messages.
const Json & require(const Json & obj, const char * key, const std::string & path);
double require_number(const Json & obj, const char * key, const std::string & path);
std::string require_string(const Json & obj, const char * key, const std::string & path);

Json to_json(const Point2 & p);
Json to_json(const Polyline & poly);
Json to_json(const LaneSegment & seg);
Json to_json(const Fov & fov);

Polyline polyline_from_json(const Json & arr, const std::string & path);
/// Reads the element fields shared by maps, ground truth and predictions.
LaneSegment segment_from_json(
  const Json & obj, const std::string & path, std::vector<std::string> * warnings);
Fov fov_from_json(const Json & arr, const std::string & path);

}  // namespace mapchange

#endif  // MAPCHANGE__JSON_IO_HPP_
