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

#ifndef AUGRC_ERRORS_HPP_
#define AUGRC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace augrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters (v, s, k) leave no error df, or violate an ordering rule.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A design failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// More zero eigenvalues than the design structure accounts for.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Fewer zero eigenvalues than expected, or a singular block that should not be.
class RankAnomalyError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace augrc

#endif  // AUGRC_ERRORS_HPP_
