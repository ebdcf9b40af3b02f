/* Copyright 2026 The Trigonal Isogeny Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "trigonal/linalg.hpp"

namespace trigonal {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const Fe inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Fe f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<size_t>(r));
  return pivots;
}

Matrix kernel(const Matrix& m_in, const Field& field, int cols) {
  Matrix m = m_in;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  Matrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Row v(static_cast<size_t>(cols), field.zero());
    v[static_cast<size_t>(free)] = field.one();
    for (size_t i = 0; i < pivots.size(); ++i) v[static_cast<size_t>(pivots[i])] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace trigonal
