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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "mapchange/errors.hpp"
#include "mapchange/prior_encoding.hpp"
#include "support.hpp"

using namespace mapchange;

TEST(PositionalEncode, ZeroValue)
{
  const auto e = positional_encode(0.0, EncoderConfig{});
  ASSERT_EQ(e.size(), 16u);
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_EQ(e[i], i % 2 == 0 ? 0.0 : 1.0);
  }
}

TEST(PositionalEncode, RangeAndIndependentRecomputation)
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-500, 500);
  for (int t = 0; t < 200; ++t) {
    const double v = u(rng);
    const std::size_t d = 4 * (1 + t % 8);
    const auto e = positional_encode(v, d, 1000.0);
    ASSERT_EQ(e.size(), d);
    for (std::size_t j = 0; j < d / 2; ++j) {
      const double omega = std::exp(std::log(1000.0) * 2.0 * static_cast<double>(j) / static_cast<double>(d));
      EXPECT_NEAR(e[2 * j], std::sin(v / omega), 1e-9);
      EXPECT_NEAR(e[2 * j + 1], std::cos(v / omega), 1e-9);
      EXPECT_LE(std::abs(e[2 * j]), 1.0);
      EXPECT_LE(std::abs(e[2 * j + 1]), 1.0);
    }
  }
}

TEST(OneHot, FrozenOrdinals)
{
  EXPECT_EQ(one_hot_boundary(BoundaryType::NonVisible), (std::array<double, 3>{1, 0, 0}));
  EXPECT_EQ(one_hot_boundary(BoundaryType::Dashed), (std::array<double, 3>{0, 1, 0}));
  EXPECT_EQ(one_hot_boundary(BoundaryType::Solid), (std::array<double, 3>{0, 0, 1}));
}

TEST(EncodePrior, Shape)
{
  LocalMap m = support::road_map();
  m.elements.pop_back();
  ASSERT_EQ(m.elements.size(), 5u);
  const PriorEncoding enc = encode_prior(m);
  EXPECT_EQ(enc.rows(), 5u);
  EXPECT_EQ(enc.cols(), 486u);
  const PriorEncoding empty = encode_prior(LocalMap{});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 486u);
  EncoderConfig cfg;
  cfg.d = 8;
  EXPECT_EQ(encode_prior(m, cfg).cols(), 30u * 8u + 6u);
}

TEST(EncodePrior, RowIsConcatenationOfPerOpOutputs)
{
  const LocalMap m = support::road_map();
  const EncoderConfig cfg;
  const PriorEncoding enc = encode_prior(m, cfg);
  for (std::size_t r = 0; r < m.elements.size(); ++r) {
    const LaneSegment & s = m.elements[r];
    std::vector<double> want;
    for (const Polyline * l : {&s.centerline, &s.left_boundary, &s.right_boundary}) {
      for (const auto & p : *l) {
        for (const double v : {p.x, p.y}) {
          const auto e = positional_encode(v, cfg.d / 2, cfg.frequency_base);
          want.insert(want.end(), e.begin(), e.end());
        }
      }
    }
    for (const auto t : {s.left_type, s.right_type}) {
      const auto h = one_hot_boundary(t);
      want.insert(want.end(), h.begin(), h.end());
    }
    const auto row = enc.row(r);
    ASSERT_EQ(want.size(), row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      EXPECT_EQ(row[c], want[c]);
    }
    double left = 0;
    double right = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      left += row[480 + k];
      right += row[483 + k];
    }
    EXPECT_EQ(left, 1.0);
    EXPECT_EQ(right, 1.0);
  }
}

TEST(EncodePrior, RowEquivariance)
{
  LocalMap m = support::road_map();
  const PriorEncoding a = encode_prior(m);
  std::reverse(m.elements.begin(), m.elements.end());
  const PriorEncoding b = encode_prior(m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto ra = a.row(r);
    const auto rb = b.row(a.rows() - 1 - r);
    EXPECT_TRUE(std::equal(ra.begin(), ra.end(), rb.begin()));
  }
}

TEST(EncodePrior, Errors)
{
  LocalMap m = support::road_map();
  EncoderConfig bad;
  bad.d = 6;
  EXPECT_THROW(encode_prior(m, bad), std::invalid_argument);
  m.elements[0].centerline.pop_back();
  EXPECT_THROW(encode_prior(m), DataError);
}

TEST(EncodePrior, Serialization)
{
  LocalMap m = support::road_map();
  m.elements.resize(2);
  const PriorEncoding enc = encode_prior(m);
  const std::string csv = encoding_to_csv(enc);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), 2 * 485);
  const std::string bin = encoding_to_binary(enc);
  ASSERT_EQ(bin.size(), 16u + 8u * 2u * 486u);
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::memcpy(&rows, bin.data(), 8);
  std::memcpy(&cols, bin.data() + 8, 8);
  EXPECT_EQ(rows, 2u);
  EXPECT_EQ(cols, 486u);
  double v = 0;
  std::memcpy(&v, bin.data() + 16 + 8 * 487, 8);
  EXPECT_EQ(v, enc.row(1)[1]);
}
