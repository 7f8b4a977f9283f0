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

#ifndef LEROY_SEXPR_HPP
#define LEROY_SEXPR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "leroy/ast.hpp"
#include "leroy/errors.hpp"

namespace leroy {

enum class SKind {
  App,    // (head child...)
  Int,    // 42
  Bool,   // True / False
  Ident,  // identifier leaf under name/def/ParamList
  Op,     // operator leaf, only under the compare/binop input aliases
  Hole,   // #k
  Rest,   // #rest: open statement-spine tail of a pattern
  Eps,    // eps: statement/list spine terminator
};

struct SExpr {
  SKind kind = SKind::Eps;
  std::string text;        // App head, Ident name or Op spelling
  std::int64_t value = 0;  // Int value, Bool 0/1, Hole index
  std::vector<SExpr> kids;

  static SExpr app(std::string head, std::vector<SExpr> kids = {});
  static SExpr integer(std::int64_t v);
  static SExpr boolean(bool v);
  static SExpr ident(std::string name);
  static SExpr op(std::string spelling);
  static SExpr hole(int index);
  static SExpr rest();
  static SExpr eps();

  bool is_app(std::string_view head) const {
    return kind == SKind::App && text == head;
  }

  friend bool operator==(const SExpr &, const SExpr &) = default;
};

/// Parenthesized text form: `(add (name x) 1)`, `eps`, `#0`, `#rest`.
std::string to_string(const SExpr &s);

/// Inverse of to_string. Leaves under identifier slots are read as
/// identifiers, so a variable named `eps` survives a round trip.
SExpr parse_sexpr(std::string_view text);

/// Number of AST nodes the s-expression stands for: statement and expression
/// heads, literals, formal parameters and holes count 1; spines, identifier
/// leaves, `eps` and `#rest` count 0.
std::size_t sexpr_ast_size(const SExpr &s);

// ---------------------------------------------------------------------------
// Lispify / delispify.

SExpr lispify(const Program &p);
SExpr lispify(const Stmt &s);
SExpr lispify(const Expr &e);
SExpr lispify_statements(const std::vector<Stmt> &stmts);

enum class SlotKind {
  Expr,
  Target,    // identifier or subscription
  Stmt,
  StmtSeq,   // StatementList spine
  ExprSeq,   // ExprList spine
  DictSeq,   // DictList spine
  ParamSeq,  // ParamList spine
  Ident,
  Operator,
};

const char *to_string(SlotKind k);

struct ShapeIssue {
  enum class Kind {
    MissingChild,
    ExtraChild,
    WrongKind,
    MisplacedRest,
    EmptySuite,
  };
  Kind kind;
  std::vector<int> path;
  std::string detail;
};

struct HoleSite {
  int index;  // hole number, -1 for an open tail
  SlotKind slot;
  std::vector<int> path;
  bool on_root_spine;  // reachable from a StatementList root via tails only
};

/// What is left when an s-expression is not a complete program: every
/// structural defect and every hole together with the syntactic position it
/// occupies.
struct PartialTree {
  SlotKind root_kind = SlotKind::Expr;
  std::vector<ShapeIssue> issues;
  std::vector<HoleSite> holes;
  std::vector<HoleSite> open_tails;

  bool well_formed() const { return issues.empty(); }
  bool complete() const { return issues.empty() && holes.empty() && open_tails.empty(); }
};

/// Classifies every node of `s` against the vocabulary. Throws SExprError
/// (unknown symbol) for heads outside the vocabulary.
PartialTree analyze_shape(const SExpr &s);

/// Exact inverse of lispify for complete programs; anything else (holes,
/// arity gaps, non-program roots) comes back as a PartialTree.
std::variant<Program, PartialTree> delispify(const SExpr &s);

/// Fragment conversions used for pattern bodies. Holes become names
/// `_param<k>`; an open tail ends the statement list. Throw SExprError when
/// the fragment is not well formed for the requested position.
Expr to_expr(const SExpr &s);
Stmt to_stmt(const SExpr &s);
std::vector<Stmt> to_stmts(const SExpr &spine);

std::string param_name(int hole_index);

}  // namespace leroy

#endif  // LEROY_SEXPR_HPP
