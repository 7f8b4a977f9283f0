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

#ifndef LEROY_AST_HPP
#define LEROY_AST_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace leroy {

struct SourceSpan {
  int file = 0;
  int begin_line = 0;
  int begin_col = 0;
  int end_line = 0;
  int end_col = 0;
};

enum class ExprKind {
  Name,
  IntConst,
  BoolConst,
  Neg,
  Not,
  Add,
  And,
  Or,
  Eq,
  NotEq,
  Is,
  Ternary,
  List,
  Dict,
  Subscript,
  Call,
  EvalInput,
};

/// An expression node. Children live in `operands` with a fixed layout per
/// kind:
///   Neg/Not:        [operand]
///   binary kinds:   [lhs, rhs]
///   Ternary:        [then, cond, else]
///   List:           [items...]
///   Dict:           [key0, value0, key1, value1, ...]
///   Subscript:      [object, index]
///   Call:           [callee, args...]
/// The operator is always part of `kind`, never an operand.
struct Expr {
  ExprKind kind = ExprKind::IntConst;
  std::string name;
  std::int64_t value = 0;
  std::vector<Expr> operands;
  SourceSpan span;

  static Expr make_name(std::string id);
  static Expr make_int(std::int64_t v);
  static Expr make_bool(bool v);
  static Expr make_unary(ExprKind k, Expr operand);
  static Expr make_binary(ExprKind k, Expr lhs, Expr rhs);
  static Expr make_ternary(Expr then_e, Expr cond, Expr else_e);
  static Expr make_list(std::vector<Expr> items);
  static Expr make_dict(std::vector<std::pair<Expr, Expr>> pairs);
  static Expr make_subscript(Expr object, Expr index);
  static Expr make_call(Expr callee, std::vector<Expr> args);
  static Expr make_eval_input();

  bool is_binary() const;
  std::size_t arg_count() const { return operands.size() - 1; }  // Call only
};

enum class StmtKind { Print, Assign, ExprStmt, Return, FunctionDef };

/// A statement node. Print/ExprStmt/Return keep their expression in
/// `exprs[0]`; Assign keeps `[target, value]`.
struct Stmt {
  StmtKind kind = StmtKind::ExprStmt;
  std::vector<Expr> exprs;
  std::string name;
  std::vector<std::string> params;
  std::vector<Stmt> body;
  SourceSpan span;

  static Stmt make_print(Expr e);
  static Stmt make_assign(Expr target, Expr value);
  static Stmt make_expr(Expr e);
  static Stmt make_return(Expr e);
  static Stmt make_def(std::string name, std::vector<std::string> params,
                       std::vector<Stmt> body);

  const Expr &value() const { return exprs.back(); }
  const Expr &target() const { return exprs.front(); }
};

struct Program {
  std::vector<Stmt> body;
};

// Structural equality; spans are ignored.
bool operator==(const Expr &a, const Expr &b);
bool operator==(const Stmt &a, const Stmt &b);
bool operator==(const Program &a, const Program &b);

/// Number of AST nodes: 1 per Statement and Expression, 1 per formal
/// parameter identifier. The Program wrapper counts 0.
std::size_t ast_size(const Expr &e);
std::size_t ast_size(const Stmt &s);
std::size_t ast_size(const Program &p);
std::size_t ast_size(const std::vector<Stmt> &stmts);

const char *to_string(ExprKind k);
const char *to_string(StmtKind k);

}  // namespace leroy

#endif  // LEROY_AST_HPP
