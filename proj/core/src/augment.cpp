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

#include "augrc/augment.hpp"

#include <string>

namespace augrc {

AugmentedDesign Augment(const ContractionDesign& c) {
  RequireValid(c);
  const int v = c.v(), s = c.s(), k = c.k();
  const int n_test = (v - k) * s;
  LabelGrid grid(v, s, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < s; ++j) grid(c.at(i, j) - 1, j) = n_test + 1 + i;
  }
  Label next = 1;
  for (int j = 0; j < s; ++j) {
    for (int l = 0; l < v; ++l) {
      if (grid(l, j) == 0) grid(l, j) = next++;
    }
  }
  return AugmentedDesign(k, std::move(grid));
}

ContractionDesign ExtractContraction(const AugmentedDesign& a) {
  const int v = a.v(), s = a.s(), k = a.k();
  if (k < 1 || k > v) throw ValidationError("check count k must lie in 1..v");
  LabelGrid cells(k, s, 0);
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < v; ++i) {
      const Label l = a.at(i, j);
      if (!a.is_check(l)) continue;
      const int row = l - a.num_test_lines() - 1;
      if (cells(row, j) != 0) {
        throw ValidationError("column " + std::to_string(j + 1) + " holds check " +
                              std::to_string(l) + " more than once");
      }
      cells(row, j) = i + 1;
    }
    for (int i = 0; i < k; ++i) {
      if (cells(i, j) == 0) {
        throw ValidationError("column " + std::to_string(j + 1) + " is missing check " +
                              std::to_string(a.check_label(i)));
      }
    }
  }
  return ContractionDesign(v, std::move(cells));
}

}  // namespace augrc
