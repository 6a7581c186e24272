// Copyright 2026 The teamq Authors.
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

#ifndef TEAMQ_SIMPLEX_HPP_
#define TEAMQ_SIMPLEX_HPP_

// Dense two-phase primal simplex with Bland's rule for small problems:
//   minimise c^T x  subject to  A x = b,  x >= 0.
// Works over any ordered field; with Rational scalars and eps = 0 every
// pivot is exact.

#include <cstddef>
#include <vector>

namespace teamq {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  T objective{};
  std::vector<T> x;
};

template <class T>
class DenseSimplex {
 public:
  DenseSimplex(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
               std::vector<T> c, T eps)
      : rows_(a.size()),
        vars_(c.size()),
        total_(vars_ + rows_),
        cost_(std::move(c)),
        eps_(eps) {
    tab_.assign(rows_, std::vector<T>(total_ + 1, T(0)));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      bool flip = b[i] < 0;
      for (std::size_t j = 0; j < vars_; ++j) {
        tab_[i][j] = flip ? T(-a[i][j]) : a[i][j];
      }
      tab_[i][vars_ + i] = 1;
      tab_[i][total_] = flip ? T(-b[i]) : b[i];
      basis_[i] = vars_ + i;
    }
  }

  LpResult<T> solve() {
    LpResult<T> result;
    std::vector<T> phase1(total_, T(0));
    for (std::size_t j = vars_; j < total_; ++j) phase1[j] = 1;
    run(phase1, total_);
    if (objective(phase1) > eps_) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    drive_out_artificials();

    std::vector<T> phase2(total_, T(0));
    for (std::size_t j = 0; j < vars_; ++j) phase2[j] = cost_[j];
    if (!run(phase2, vars_)) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.x.assign(vars_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) result.x[basis_[i]] = tab_[i][total_];
    }
    result.objective = objective(phase2);
    return result;
  }

 private:
  T objective(const std::vector<T>& cost) const {
    T value = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      value += cost[basis_[i]] * tab_[i][total_];
    }
    return value;
  }

  void pivot(std::size_t row, std::size_t col) {
    T scale = tab_[row][col];
    for (auto& v : tab_[row]) v /= scale;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      T factor = tab_[i][col];
      for (std::size_t j = 0; j <= total_; ++j) {
        tab_[i][j] -= factor * tab_[row][j];
      }
    }
    basis_[row] = col;
  }

  // Returns false when the objective is unbounded below. Only columns below
  // `allowed` may enter the basis.
  bool run(const std::vector<T>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        T reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          reduced -= cost[basis_[i]] * tab_[i][j];
        }
        if (reduced < -eps_) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return true;

      std::size_t leaving = rows_;
      T best_ratio{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!(tab_[i][entering] > eps_)) continue;
        T ratio = tab_[i][total_] / tab_[i][entering];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) return false;
      pivot(leaving, entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) continue;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (tab_[i][j] > eps_ || tab_[i][j] < -eps_) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t total_;
  std::vector<T> cost_;
  T eps_;
  std::vector<std::vector<T>> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace teamq

#endif  // TEAMQ_SIMPLEX_HPP_
