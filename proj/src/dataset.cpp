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

#include "mapchange/dataset.hpp"

#include <algorithm>

#include "mapchange/errors.hpp"

namespace mapchange
{

bool Sequence::has_change() const
{
  return std::any_of(frames.begin(), frames.end(), [](const FrameRecord & f) {
    return f.ground_truth.has_change();
  });
}

std::size_t Dataset::frame_count() const
{
  std::size_t n = 0;
  for (const auto & s : sequences) {
    n += s.frames.size();
  }
  return n;
}

void Dataset::check_alignment() const
{
  for (const auto & s : sequences) {
    for (const auto & f : s.frames) {
      if (f.prediction.frame_id != f.ground_truth.frame_id) {
        throw DataError(
          "sequence '" + s.id + "': prediction frame '" + f.prediction.frame_id +
          "' does not match ground-truth frame '" + f.ground_truth.frame_id + "'");
      }
    }
  }
}

std::string_view to_string(ChangeFilter filter)
{
  switch (filter) {
    case ChangeFilter::Any:
      return "all";
    case ChangeFilter::Insertion:
      return "insertion";
    case ChangeFilter::Deletion:
      return "deletion";
  }
  return "all";
}

bool flagged(const PredictedElement & e, ChangeFilter filter)
{
  switch (filter) {
    case ChangeFilter::Any:
      return e.changed();
    case ChangeFilter::Insertion:
      return e.ins_flag();
    case ChangeFilter::Deletion:
      return e.del_flag();
  }
  return false;
}

bool is_change(ChangeLabel label, ChangeFilter filter)
{
  switch (filter) {
    case ChangeFilter::Any:
      return label != ChangeLabel::Unchanged;
    case ChangeFilter::Insertion:
      return label == ChangeLabel::Inserted;
    case ChangeFilter::Deletion:
      return label == ChangeLabel::Deleted;
  }
  return false;
}

bool frame_has_change(const FrameGroundTruth & gt, ChangeFilter filter)
{
  return std::any_of(gt.elements.begin(), gt.elements.end(), [filter](const LabeledElement & e) {
    return is_change(e.label, filter);
  });
}

}  // namespace mapchange
