// count_matrix.hpp
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
//
// Copyright 2026 The entropia-cpp Authors.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "entropia/error.hpp"

namespace entropia {

/// Square matrix of nonnegative integer counts, stored row-wise sparse.
/// Rows keep their entries sorted by column.
class CountMatrix {
 public:
  using Entry = std::pair<std::size_t, std::uint64_t>;

  CountMatrix() = default;
  explicit CountMatrix(std::size_t n) : rows_(n) {}

  /// Dense construction, mostly for tests: {{0, 1}, {1, 0}}.
  CountMatrix(std::initializer_list<std::initializer_list<std::uint64_t>> dense)
      : rows_(dense.size()) {
    std::size_t i = 0;
    for (const auto& row : dense) {
      if (row.size() != dense.size()) {
        throw Error(ErrorCode::kInvalidAutomaton, "count matrix must be square");
      }
      std::size_t j = 0;
      for (std::uint64_t v : row) {
        if (v != 0) add(i, j, v);
        ++j;
      }
      ++i;
    }
  }

  std::size_t size() const noexcept { return rows_.size(); }

  void add(std::size_t i, std::size_t j, std::uint64_t count = 1) {
    auto& row = rows_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
      it->second += count;
    } else {
      row.insert(it, Entry{j, count});
    }
  }

  std::uint64_t at(std::size_t i, std::size_t j) const {
    const auto& row = rows_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == j) ? it->second : 0;
  }

  const std::vector<Entry>& row(std::size_t i) const { return rows_.at(i); }

  std::vector<std::vector<std::uint64_t>> to_dense() const {
    std::vector<std::vector<std::uint64_t>> out(size(), std::vector<std::uint64_t>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) {
      for (const auto& [j, v] : rows_[i]) out[i][j] = v;
    }
    return out;
  }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace entropia
