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

#ifndef LEROY_UNPARSE_HPP
#define LEROY_UNPARSE_HPP

#include <string>

#include "leroy/ast.hpp"

namespace leroy {

/// Emits Python 3 source. Suites are indented by 4 spaces; parentheses are
/// inserted only where precedence requires them. No trailing newline.
std::string unparse(const Program &p);
std::string unparse(const Stmt &s);
std::string unparse(const Expr &e);

}  // namespace leroy

#endif  // LEROY_UNPARSE_HPP
