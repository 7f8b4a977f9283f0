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

#ifndef LEROY_PARSER_HPP
#define LEROY_PARSER_HPP

#include <string>
#include <string_view>

#include "leroy/ast.hpp"
#include "leroy/errors.hpp"

namespace leroy {

/// Parses a complete program. Throws SyntaxError for anything outside the
/// supported grammar: nested `def`, `return` outside a function, lambdas,
/// loops and `if` statements, string literals, chained comparisons, and any
/// use of `eval`/`input` other than the fixed `eval(input())` form.
Program parse_program(std::string_view source, std::string file_name = "<input>",
                      int file_id = 0);

/// Parses a single expression (used for input-script literals).
Expr parse_expression(std::string_view source,
                      std::string file_name = "<input>");

}  // namespace leroy

#endif  // LEROY_PARSER_HPP
