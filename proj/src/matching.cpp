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

#include "mapchange/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "mapchange/geometry.hpp"

namespace mapchange
{

namespace
{

struct SquareProblem
{
  std::size_t n{0};
  std::vector<double> a;  // n x n, infeasible entries replaced by `big`
  double big{0.0};
  double max_finite{0.0};

  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

SquareProblem pad(const CostMatrix & costs)
{
  SquareProblem sq;
  sq.n = std::max(costs.rows(), costs.cols());
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      const double v = costs(r, c);
      if (std::isnan(v) || v < 0.0) {
        throw std::invalid_argument("hungarian_assign: costs must be >= 0 or +inf");
      }
      if (std::isfinite(v)) {
        sq.max_finite = std::max(sq.max_finite, v);
      }
    }
  }
  // Any assignment with one more infeasible pair costs more than every
  // difference in finite totals, so cardinality is maximized first.
  sq.big = (sq.max_finite + 1.0) * static_cast<double>(sq.n + 1);
  sq.a.assign(sq.n * sq.n, 0.0);
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      const double v = costs(r, c);
      sq.a[r * sq.n + c] = std::isfinite(v) ? v : sq.big;
    }
  }
  return sq;
}

struct Solution
{
  std::vector<std::size_t> row_to_col;
  std::vector<double> u;  // row potentials
  std::vector<double> v;  // column potentials
};

// Shortest augmenting path Hungarian method, O(n^3). On return the reduced
// costs a(i, j) - u[i] - v[j] are non-negative and zero on matched pairs.
Solution solve(const SquareProblem & sq)
{
  const std::size_t n = sq.n;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const double cur = sq(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Solution s;
  s.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    s.row_to_col[p[j] - 1] = j - 1;
  }
  s.u.assign(u.begin() + 1, u.end());
  s.v.assign(v.begin() + 1, v.end());
  return s;
}

double square_total(const SquareProblem & sq, const std::vector<std::size_t> & row_to_col)
{
  double total = 0.0;
  for (std::size_t r = 0; r < sq.n; ++r) {
    total += sq(r, row_to_col[r]);
  }
  return total;
}

// Among all perfect matchings of the equality subgraph (all of which are
// optimal), picks the lexicographically smallest one over the real rows.
std::vector<std::size_t> lexicographic_optimum(
  const SquareProblem & sq, const Solution & sol, std::size_t real_rows, std::size_t real_cols)
{
  const std::size_t n = sq.n;
  const double tol = 1e-9 * (1.0 + sq.big);
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(sq(r, c) - sol.u[r] - sol.v[c]) <= tol) {
        tight[r].push_back(c);
      }
    }
  }

  std::vector<std::size_t> m = sol.row_to_col;
  std::vector<std::size_t> owner(n);
  for (std::size_t r = 0; r < n; ++r) {
    owner[m[r]] = r;
  }
  std::vector<bool> locked(n, false);
  std::vector<bool> visited(n, false);

  // Re-seat row r somewhere else, ending on the freed column `target`.
  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t r, std::size_t target) {
    for (const std::size_t c : tight[r]) {
      if (c == target) {
        m[r] = c;
        owner[c] = r;
        return true;
      }
      const std::size_t next = owner[c];
      if (locked[next] || visited[next]) {
        continue;
      }
      visited[next] = true;
      if (augment(next, target)) {
        m[r] = c;
        owner[c] = r;
        return true;
      }
    }
    return false;
  };

  const auto try_seat = [&](std::size_t i, std::size_t j) {
    if (m[i] == j) {
      return true;
    }
    const std::size_t displaced = owner[j];
    if (locked[displaced]) {
      return false;
    }
    const std::size_t freed = m[i];
    m[i] = j;
    owner[j] = i;
    locked[i] = true;
    std::fill(visited.begin(), visited.end(), false);
    visited[displaced] = true;
    if (augment(displaced, freed)) {
      return true;
    }
    locked[i] = false;
    m[i] = freed;
    owner[freed] = i;
    owner[j] = displaced;
    m[displaced] = j;
    return false;
  };

  for (std::size_t i = 0; i < real_rows; ++i) {
    std::vector<std::size_t> matched;
    std::vector<std::size_t> unmatched;
    for (const std::size_t c : tight[i]) {
      const bool real = c < real_cols && sq(i, c) < sq.big;
      (real ? matched : unmatched).push_back(c);
    }
    bool seated = false;
    for (const std::size_t c : matched) {
      if (try_seat(i, c)) {
        seated = true;
        break;
      }
    }
    if (!seated) {
      for (const std::size_t c : unmatched) {
        if (try_seat(i, c)) {
          seated = true;
          break;
        }
      }
    }
    if (!seated) {
      return sol.row_to_col;
    }
    locked[i] = true;
  }
  return m;
}

}  // namespace

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto & r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("CostMatrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

double Assignment::total_cost() const
{
  double total = 0.0;
  for (const auto & p : pairs) {
    total += p.cost;
  }
  return total;
}

Assignment hungarian_assign(const CostMatrix & costs)
{
  Assignment out;
  const std::size_t rows = costs.rows();
  const std::size_t cols = costs.cols();
  if (rows == 0 || cols == 0) {
    for (std::size_t r = 0; r < rows; ++r) {
      out.unmatched_preds.push_back(r);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out.unmatched_gts.push_back(c);
    }
    return out;
  }

  const SquareProblem sq = pad(costs);
  const Solution sol = solve(sq);
  std::vector<std::size_t> chosen = lexicographic_optimum(sq, sol, rows, cols);
  const double base = square_total(sq, sol.row_to_col);
  if (square_total(sq, chosen) > base + 1e-9 * (1.0 + std::abs(base))) {
    chosen = sol.row_to_col;
  }

  std::vector<bool> gt_used(cols, false);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t c = chosen[r];
    if (c < cols && std::isfinite(costs(r, c))) {
      out.pairs.push_back({r, c, costs(r, c)});
      gt_used[c] = true;
    } else {
      out.unmatched_preds.push_back(r);
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (!gt_used[c]) {
      out.unmatched_gts.push_back(c);
    }
  }
  return out;
}

CostMatrix build_cost_matrix(const FramePrediction & preds, const FrameGroundTruth & gts, ExecutionPolicy policy)
{
  const std::size_t rows = preds.elements.size();
  const std::size_t cols = gts.elements.size();
  CostMatrix m(rows, cols, kInfeasible);
  const auto fill_row = [&](std::size_t i) {
    const LaneSegment & p = preds.elements[i].geometry;
    for (std::size_t j = 0; j < cols; ++j) {
      const LaneSegment & g = gts.elements[j].element;
      if (p.element_class == g.element_class) {
        m(i, j) = segment_distance(p, g);
      }
    }
  };
  if (policy == ExecutionPolicy::Parallel) {
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      fill_row(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < rows; ++i) {
      fill_row(i);
    }
  }
  return m;
}

}  // namespace mapchange
