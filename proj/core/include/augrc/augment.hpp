// Copyright 2026 The augrc Authors
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

#ifndef AUGRC_AUGMENT_HPP_
#define AUGRC_AUGMENT_HPP_

#include "augrc/design.hpp"

namespace augrc {

// Expands a contraction into the v x s augmented array. Pseudo-treatment l at
// contraction cell (i, j) puts check (v-k)s + 1 + i at augmented cell (l, j);
// test lines 1..(v-k)s fill the remaining cells column by column, top to
// bottom. Throws ValidationError for an invalid contraction.
AugmentedDesign Augment(const ContractionDesign& c);

// Inverse of Augment: check (v-k)s + 1 + i at (l, j) gives contraction cell
// (i, j) = l + 1. Throws ValidationError when a column lacks a check or holds
// one twice.
ContractionDesign ExtractContraction(const AugmentedDesign& a);

}  // namespace augrc

#endif  // AUGRC_AUGMENT_HPP_
