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


// Published properties of 21 equally replicated contractions with v > s and
// the E_aug values of the augmented designs they generate. Values carry the
// printed rounding (four decimals, six for E_aug).

#ifndef AUGRC_TOOLS_REFERENCE_CONTRACTIONS_HPP_
#define AUGRC_TOOLS_REFERENCE_CONTRACTIONS_HPP_

#include <array>

namespace augrc::cli {

struct ReferenceContraction {
  int k, v, s, r_bar;
  double e_con, c_bar_s, e_dual, e_aug;
};

inline constexpr std::array<ReferenceContraction, 21> kReferenceContractions = {{
    {3, 12, 8, 2, 0.5739, 0.4828, 0.4828, 0.388112},
    {3, 15, 10, 2, 0.5359, 0.4424, 0.4467, 0.368217},
    {3, 18, 12, 2, 0.5135, 0.4176, 0.4205, 0.356396},
    {4, 16, 8, 2, 0.6618, 0.5385, 0.5385, 0.450683},
    {4, 16, 12, 3, 0.7547, 0.7097, 0.7097, 0.560000},
    {4, 18, 9, 2, 0.6479, 0.5111, 0.5111, 0.441030},
    {4, 20, 10, 2, 0.6423, 0.5000, 0.5000, 0.437095},
    {4, 20, 15, 3, 0.7339, 0.6825, 0.6825, 0.549752},
    {4, 22, 11, 2, 0.6338, 0.4851, 0.4851, 0.431698},
    {4, 24, 12, 2, 0.6310, 0.4793, 0.4793, 0.429763},
    {4, 24, 18, 3, 0.7203, 0.6652, 0.6652, 0.543467},
    {4, 26, 13, 2, 0.6232, 0.4688, 0.4688, 0.425538},
    {5, 20, 8, 2, 0.6976, 0.5453, 0.5453, 0.480081},
    {5, 20, 12, 3, 0.7881, 0.7201, 0.7213, 0.590627},
    {5, 20, 16, 4, 0.8244, 0.7993, 0.8000, 0.646791},
    {5, 25, 10, 2, 0.6966, 0.5294, 0.5294, 0.476348},
    {5, 25, 15, 3, 0.7780, 0.6992, 0.7000, 0.584213},
    {5, 25, 20, 4, 0.8096, 0.7801, 0.7808, 0.640252},
    {5, 30, 12, 2, 0.6867, 0.5038, 0.5038, 0.468846},
    {5, 30, 18, 3, 0.7669, 0.6805, 0.6814, 0.578506},
    {5, 30, 24, 4, 0.7988, 0.7661, 0.7665, 0.635813},
}};

}  // namespace augrc::cli

#endif  // AUGRC_TOOLS_REFERENCE_CONTRACTIONS_HPP_
