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

// Dense matrices over a finite field with row reduction.

#ifndef TRIGONAL_LINALG_HPP_
#define TRIGONAL_LINALG_HPP_

#include <vector>

#include "trigonal/field.hpp"

namespace trigonal {

using Row = std::vector<Fe>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns pivot columns. Zero rows are
/// dropped.
std::vector<int> rref(Matrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column, read
/// off the reduced form (free coordinate 1, other free coordinates 0).
Matrix kernel(const Matrix& m, const Field& field, int cols);

}  // namespace trigonal

#endif  // TRIGONAL_LINALG_HPP_
