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

// JSON forms of the result types. Keys keep insertion order so that the
// same value always serialises to the same bytes.

#ifndef AUGRC_SERIALIZE_HPP_
#define AUGRC_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "augrc/efficiency.hpp"
#include "augrc/planner.hpp"
#include "augrc/search.hpp"

namespace augrc {

using Json = nlohmann::ordered_json;

// Flat object: eCon, cBarV, cBarS, eDual, eAugFormula, eAugDirect (null when
// absent), generallyBalanced, cefsContraction, cefsAugmented (null when absent).
Json ToJson(const EfficiencyReport& report);
EfficiencyReport ReportFromJson(const Json& j);

// `design` holds the contraction in the text format; `trace` is an array of
// [iteration, objective] pairs. Elapsed time is included only on request so
// that artifacts can be compared byte for byte.
Json ToJson(const SearchResult& result, bool include_timing);
Json ToJson(const DirectSearchResult& result, bool include_timing);

Json ToJson(const DesignPlan& plan);

}  // namespace augrc

#endif  // AUGRC_SERIALIZE_HPP_
