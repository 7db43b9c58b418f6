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

#ifndef MAPCHANGE__MATCHING_HPP_
#define MAPCHANGE__MATCHING_HPP_

#include <limits>
#include <vector>

#include "mapchange/dataset.hpp"
#include "mapchange/parallel.hpp"

namespace mapchange
{

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

/// Rows are predictions, columns ground truth. Entries are meters or
/// kInfeasible.
class CostMatrix
{
public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
  : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {
  }
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double & operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<double> data_;
};

struct MatchedPair
{
  std::size_t pred;
  std::size_t gt;
  double cost;

  friend bool operator==(const MatchedPair &, const MatchedPair &) = default;
};

struct Assignment
{
  /// Sorted by prediction index.
  std::vector<MatchedPair> pairs;
  std::vector<std::size_t> unmatched_preds;
  std::vector<std::size_t> unmatched_gts;

  double total_cost() const;
};

/// Optimal one-to-one assignment. Among matchings of maximum cardinality
/// over finite entries, minimizes total cost; infeasible pairs are never
/// matched. Ties between optima resolve to the lexicographically smallest
/// (pred, gt) sequence.
Assignment hungarian_assign(const CostMatrix & costs);

/// Entry (i, j) = segment_distance(pred_i, gt_j) when classes agree, else
/// kInfeasible.
CostMatrix build_cost_matrix(
  const FramePrediction & preds, const FrameGroundTruth & gts,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace mapchange

#endif  // MAPCHANGE__MATCHING_HPP_
