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

#ifndef MAPCHANGE__ERRORS_HPP_
#define MAPCHANGE__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mapchange
{

/// Base class for data errors (bad input files, degenerate geometry).
/// The CLI maps these to exit code 1.
class DataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ZeroLengthPolyline : public DataError
{
public:
  ZeroLengthPolyline() : DataError("polyline has zero arclength") {}
};

class DegenerateElement : public DataError
{
public:
  explicit DegenerateElement(const std::string & id)
  : DataError("degenerate element '" + id + "': polygon area below 1e-6 m^2"), element_id(id)
  {
  }
  std::string element_id;
};

class EmptySet : public DataError
{
public:
  EmptySet() : DataError("point set is empty") {}
};

class NoHostLane : public DataError
{
public:
  NoHostLane() : DataError("map contains no lane to host a synthetic crossing") {}
};

/// Malformed JSON. `line` and `column` are 1-based, 0 when unknown.
class ParseError : public DataError
{
public:
  ParseError(const std::string & what, std::size_t line_no, std::size_t column_no)
  : DataError(what), line(line_no), column(column_no)
  {
  }
  std::size_t line;
  std::size_t column;
};

/// Well-formed JSON that violates the documented schema.
class SchemaError : public DataError
{
public:
  SchemaError(const std::string & field_name, const std::string & detail_text)
  : DataError("schema error at '" + field_name + "': " + detail_text), field(field_name), detail(detail_text)
  {
  }
  std::string field;
  std::string detail;
};

}  // namespace mapchange

#endif  // MAPCHANGE__ERRORS_HPP_
