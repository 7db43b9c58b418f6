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

#include "mapchange/prior_encoding.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "mapchange/errors.hpp"

namespace mapchange
{

void EncoderConfig::check() const
{
  if (d == 0 || d % 4 != 0) {
    throw std::invalid_argument("EncoderConfig: d must be a positive multiple of 4");
  }
  if (!(frequency_base > 0.0) || !std::isfinite(frequency_base)) {
    throw std::invalid_argument("EncoderConfig: frequency_base must be positive");
  }
}

std::vector<double> positional_encode(double value, std::size_t dim, double frequency_base)
{
  if (dim == 0 || dim % 2 != 0) {
    throw std::invalid_argument("positional_encode: dim must be positive and even");
  }
  std::vector<double> out(dim);
  for (std::size_t j = 0; j < dim / 2; ++j) {
    const double omega =
      std::pow(frequency_base, 2.0 * static_cast<double>(j) / static_cast<double>(dim));
    out[2 * j] = std::sin(value / omega);
    out[2 * j + 1] = std::cos(value / omega);
  }
  return out;
}

std::vector<double> positional_encode(double value, const EncoderConfig & cfg)
{
  return positional_encode(value, cfg.d, cfg.frequency_base);
}

std::array<double, kBoundaryTypeCount> one_hot_boundary(BoundaryType t)
{
  std::array<double, kBoundaryTypeCount> out{};
  out[static_cast<std::size_t>(t)] = 1.0;
  return out;
}

PriorEncoding encode_prior(const LocalMap & map, const EncoderConfig & cfg)
{
  cfg.check();
  const std::size_t per_scalar = cfg.d / 2;
  PriorEncoding enc(map.elements.size(), cfg.columns());
  for (std::size_t r = 0; r < map.elements.size(); ++r) {
    const LaneSegment & seg = map.elements[r];
    auto row = enc.row(r);
    std::size_t col = 0;
    for (const Polyline * line : {&seg.centerline, &seg.left_boundary, &seg.right_boundary}) {
      if (line->size() != kCanonicalPoints) {
        throw DataError("encode_prior: element '" + seg.id + "' is not in canonical 10-point form");
      }
      for (const Point2 & p : *line) {
        for (const double v : {p.x, p.y}) {
          if (!std::isfinite(v)) {
            throw DataError("encode_prior: element '" + seg.id + "' has a non-finite coordinate");
          }
          const auto e = positional_encode(v, per_scalar, cfg.frequency_base);
          std::copy(e.begin(), e.end(), row.begin() + static_cast<std::ptrdiff_t>(col));
          col += per_scalar;
        }
      }
    }
    for (const BoundaryType t : {seg.left_type, seg.right_type}) {
      const auto h = one_hot_boundary(t);
      std::copy(h.begin(), h.end(), row.begin() + static_cast<std::ptrdiff_t>(col));
      col += h.size();
    }
  }
  return enc;
}

std::string encoding_to_csv(const PriorEncoding & enc)
{
  std::string out;
  char buf[32];
  for (std::size_t r = 0; r < enc.rows(); ++r) {
    const auto row = enc.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
      if (c > 0) {
        out += ',';
      }
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string encoding_to_binary(const PriorEncoding & enc)
{
  static_assert(sizeof(double) == 8);
  std::string out;
  const auto put_u64 = [&out](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
    }
  };
  put_u64(enc.rows());
  put_u64(enc.cols());
  for (const double v : enc.data()) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof(bits));
    put_u64(bits);
  }
  return out;
}

}  // namespace mapchange
