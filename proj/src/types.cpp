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

#include "mapchange/types.hpp"

#include <stdexcept>
#include <string>

namespace mapchange
{

std::string_view to_string(ElementClass c)
{
  return c == ElementClass::Lane ? "lane" : "pedestrian_crossing";
}

std::string_view to_string(ChangeLabel label)
{
  switch (label) {
    case ChangeLabel::Unchanged:
      return "unchanged";
    case ChangeLabel::Inserted:
      return "inserted";
    case ChangeLabel::Deleted:
      return "deleted";
  }
  return "unchanged";
}

ElementClass element_class_from_string(std::string_view name)
{
  if (name == "lane") {
    return ElementClass::Lane;
  }
  if (name == "pedestrian_crossing") {
    return ElementClass::PedestrianCrossing;
  }
  throw std::invalid_argument("unknown element class '" + std::string(name) + "'");
}

ChangeLabel change_label_from_string(std::string_view name)
{
  if (name == "unchanged") {
    return ChangeLabel::Unchanged;
  }
  if (name == "inserted") {
    return ChangeLabel::Inserted;
  }
  if (name == "deleted") {
    return ChangeLabel::Deleted;
  }
  throw std::invalid_argument("unknown change label '" + std::string(name) + "'");
}

}  // namespace mapchange
