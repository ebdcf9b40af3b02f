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

// Embeddings between finite fields of the same characteristic.

#ifndef TRIGONAL_EMBEDDING_HPP_
#define TRIGONAL_EMBEDDING_HPP_

#include "trigonal/field.hpp"

namespace trigonal {

/// Image of a in target, where a's field is a subfield of target. The map
/// sends the generator of the source to the canonically smallest root of the
/// source modulus in target; maps are cached per field pair.
Fe embed(const Fe& a, const Field& target);

/// True when a lies in the image of the subfield of degree k.
bool in_subfield(const Fe& a, int k);

/// Inverse of embed; throws ContextMismatch when a is not in the image.
Fe restrict_to(const Fe& a, const Field& subfield);

/// Smallest k such that a lies in the subfield of degree k.
int minimal_degree(const Fe& a);

}  // namespace trigonal

#endif  // TRIGONAL_EMBEDDING_HPP_
