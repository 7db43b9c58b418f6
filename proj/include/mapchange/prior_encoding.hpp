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

#ifndef MAPCHANGE__PRIOR_ENCODING_HPP_
#define MAPCHANGE__PRIOR_ENCODING_HPP_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mapchange/types.hpp"

namespace mapchange
{

struct EncoderConfig
{
  /// Embedding budget per encoded point; each of its two coordinates gets
  /// d/2 entries. Must be a positive multiple of 4.
  std::size_t d{16};
  double frequency_base{1000.0};

  static constexpr std::size_t k = kBoundaryTypeCount;

  /// Points per element: centerline, left and right boundary, 10 each.
  static constexpr std::size_t kPointsPerElement = 3 * kCanonicalPoints;

  std::size_t columns() const { return kPointsPerElement * d + 2 * k; }

  /// Throws std::invalid_argument if d is not a positive multiple of 4 or
  /// the base is not positive.
  void check() const;
};

/// Row-major m x (30*d + 2*k) matrix. Row layout:
///   [enc(center[0].x) enc(center[0].y) ... enc(right[9].y) | left one-hot | right one-hot]
class PriorEncoding
{
public:
  PriorEncoding(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<double> & data() const { return data_; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Interleaved sin/cos encoding of one scalar: `dim` entries,
/// entry 2j = sin(v / w_j), entry 2j+1 = cos(v / w_j), w_j = base^(2j/dim).
/// `dim` must be even.
std::vector<double> positional_encode(double value, std::size_t dim, double frequency_base);

/// Encoding with dim = cfg.d.
std::vector<double> positional_encode(double value, const EncoderConfig & cfg);

std::array<double, kBoundaryTypeCount> one_hot_boundary(BoundaryType t);

/// Encodes every element of `map` as one row. Throws DataError if an element
/// is not in canonical 10-point form.
PriorEncoding encode_prior(const LocalMap & map, const EncoderConfig & cfg = {});

std::string encoding_to_csv(const PriorEncoding & enc);
/// Little-endian: u64 rows, u64 cols, then rows*cols float64 values.
std::string encoding_to_binary(const PriorEncoding & enc);

}  // namespace mapchange

#endif  // MAPCHANGE__PRIOR_ENCODING_HPP_
