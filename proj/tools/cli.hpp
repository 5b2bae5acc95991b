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


// Command-line front end. Run() is the whole program minus process setup so
// that tests can drive it in-process.
//
// Exit codes: 0 success, 1 internal error, 2 infeasible input or a design
// that fails validation (including parse errors and bad flags).

#ifndef AUGRC_TOOLS_CLI_HPP_
#define AUGRC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace augrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view data);

}  // namespace augrc::cli

#endif  // AUGRC_TOOLS_CLI_HPP_
