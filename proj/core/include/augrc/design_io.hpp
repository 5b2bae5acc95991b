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

// Plain-text design files:
//
//   # contraction v=12 s=8 k=3
//   3,7,9,1,10,8,2,6
//   ...
//
// or `# augmented v=.. s=.. k=..` followed by v rows. One line per array
// row, comma-separated 1-based labels. Blank lines are ignored.

#ifndef AUGRC_DESIGN_IO_HPP_
#define AUGRC_DESIGN_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "augrc/design.hpp"

namespace augrc {

using AnyDesign = std::variant<ContractionDesign, AugmentedDesign>;

std::string FormatContraction(const ContractionDesign& c);
std::string FormatAugmented(const AugmentedDesign& a);

// Throws ParseError with 1-based line/column on malformed input. Shape is
// checked against the header; structural validity is not.
AnyDesign ParseDesign(std::string_view text);

AnyDesign ReadDesignFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace augrc

#endif  // AUGRC_DESIGN_IO_HPP_
