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

#ifndef LEROY_PATTERN_HPP
#define LEROY_PATTERN_HPP

#include <string>
#include <vector>

#include "leroy/sexpr.hpp"

namespace leroy {

/// Where a pattern can be rooted: an expression, or a prefix of a statement
/// spine (optionally leaving the tail open with `#rest`).
enum class RootKind { Expr, Spine };

/// An s-expression with holes `#0..#k-1`, numbered densely in first
/// occurrence order.
struct Pattern {
  SExpr body;
  int arity = 0;
  std::vector<int> hole_order;  // always 0..arity-1 once validated

  /// Validates hole numbering and that the body is not a bare hole or
  /// `#rest`. Throws SExprError otherwise. A single statement `S` is read as
  /// `(StatementList S #rest)`.
  static Pattern from_sexpr(SExpr body);
  static Pattern parse(std::string_view text) { return from_sexpr(parse_sexpr(text)); }

  RootKind root_kind() const;
  bool open_tail() const;
  std::string str() const { return to_string(body); }
};

/// Replaces holes by `args[k]` and drops the `#rest` tail (the spine ends
/// there). Used to rebuild the region a match covers.
SExpr instantiate(const SExpr &body, const std::vector<SExpr> &args);

}  // namespace leroy

#endif  // LEROY_PATTERN_HPP
