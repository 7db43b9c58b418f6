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

#ifndef MAPCHANGE__DATASET_IO_HPP_
#define MAPCHANGE__DATASET_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mapchange/dataset.hpp"
#include "mapchange/json_io.hpp"

namespace mapchange
{

inline constexpr const char * kManifestSchemaVersion = "1.0";

struct SequenceManifest
{
  std::string id;
  std::vector<std::string> frame_ids;
  /// Distinct ground-truth element ids labeled Inserted / Deleted.
  std::size_t insertions{0};
  std::size_t deletions{0};
  bool has_change{false};
};

struct Manifest
{
  std::vector<SequenceManifest> sequences;

  std::size_t change_sequences() const;
  std::size_t no_change_sequences() const;
  std::size_t insertions() const;
  std::size_t deletions() const;
  std::size_t frames() const;
};

Manifest make_manifest(const Dataset & ds);
Json manifest_to_json(const Manifest & m);
Manifest manifest_from_json(const Json & doc);

std::string save_ground_truth(const FrameGroundTruth & gt);
FrameGroundTruth load_ground_truth(std::string_view text);
std::string save_prediction(const FramePrediction & pred);
FramePrediction load_prediction(std::string_view text);

/// Layout: <dir>/manifest.json and <dir>/<sequence>/{stale,gt,pred}/<frame>.json.
void save_dataset(const Dataset & ds, const std::string & dir);

/// Inverse of save_dataset. Errors name the offending file.
Dataset load_dataset(const std::string & dir);

}  // namespace mapchange

#endif  // MAPCHANGE__DATASET_IO_HPP_
