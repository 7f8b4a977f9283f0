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

#ifndef LEROY_INTERP_HPP
#define LEROY_INTERP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leroy/ast.hpp"
#include "leroy/errors.hpp"

namespace leroy {

struct Value;
using ListRef = std::shared_ptr<std::vector<Value>>;
using DictRef = std::shared_ptr<std::vector<std::pair<Value, Value>>>;

/// A runtime value. Lists and dicts have reference semantics; dicts keep
/// insertion order.
struct Value {
  enum class Kind { Int, Bool, List, Dict, None, Function, Builtin };

  Kind kind = Kind::None;
  std::int64_t num = 0;
  ListRef list;
  DictRef dict;
  const Stmt *function = nullptr;

  static Value integer(std::int64_t v) { return Value{Kind::Int, v, {}, {}, nullptr}; }
  static Value boolean(bool v) { return Value{Kind::Bool, v ? 1 : 0, {}, {}, nullptr}; }
  static Value none() { return Value{}; }
};

/// Python 3 `repr` of a value, as `print` shows it.
std::string repr(const Value &v);

/// Python `==`.
bool values_equal(const Value &a, const Value &b);

using InputScript = std::vector<Value>;

/// One literal per non-blank line (ints, booleans, lists and dicts of those).
InputScript parse_input_script(std::string_view text);

/// Raised for dynamic errors: undefined names, bad operand kinds, bad
/// subscripts, call arity mismatches. Carries the output printed so far.
class RuntimeError : public Error {
public:
  RuntimeError(const std::string &msg, std::string partial_output)
      : Error(msg), partial_output_(std::move(partial_output)) {}
  const std::string &partial_output() const { return partial_output_; }

private:
  std::string partial_output_;
};

class InputExhausted : public RuntimeError {
public:
  explicit InputExhausted(std::string partial_output)
      : RuntimeError("eval(input()) called with no input left", std::move(partial_output)) {}
};

/// Runs a program and returns everything it printed.
std::string run(const Program &p, const InputScript &inputs);

/// Outcome of a run that may fail; used for differential comparisons where
/// two programs must agree on output and on failure alike.
/// Two outcomes agree when they printed the same text and both succeeded or
/// both failed; error messages are informational only.
struct RunOutcome {
  std::string output;
  bool failed = false;
  std::string error;

  bool agrees_with(const RunOutcome &o) const {
    return output == o.output && failed == o.failed;
  }
};

RunOutcome run_capture(const Program &p, const InputScript &inputs);

}  // namespace leroy

#endif  // LEROY_INTERP_HPP
