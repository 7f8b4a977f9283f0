// Copyright 2026 The Leroy Authors. All rights reserved.
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

#ifndef LEROY_ERRORS_HPP
#define LEROY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leroy {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Source text outside the supported grammar. The message is formatted as
/// `file:line:col: message`.
class SyntaxError : public Error {
public:
  SyntaxError(std::string file, int line, int col, std::string message)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
              ": " + message),
        file_(std::move(file)), line_(line), col_(col),
        message_(std::move(message)) {}

  const std::string &file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string &message() const { return message_; }

private:
  std::string file_;
  int line_;
  int col_;
  std::string message_;
};

/// Malformed s-expression text or a head symbol outside the vocabulary.
class SExprError : public Error {
public:
  using Error::Error;
};

/// A pipeline invariant failed (e.g. a rewritten program no longer parses).
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace leroy

#endif  // LEROY_ERRORS_HPP
