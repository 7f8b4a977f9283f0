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

#include "leroy/ast.hpp"

namespace leroy {

Expr Expr::make_name(std::string id) {
  Expr e;
  e.kind = ExprKind::Name;
  e.name = std::move(id);
  return e;
}

Expr Expr::make_int(std::int64_t v) {
  Expr e;
  e.kind = ExprKind::IntConst;
  e.value = v;
  return e;
}

Expr Expr::make_bool(bool v) {
  Expr e;
  e.kind = ExprKind::BoolConst;
  e.value = v ? 1 : 0;
  return e;
}

Expr Expr::make_unary(ExprKind k, Expr operand) {
  Expr e;
  e.kind = k;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::make_binary(ExprKind k, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = k;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::make_ternary(Expr then_e, Expr cond, Expr else_e) {
  Expr e;
  e.kind = ExprKind::Ternary;
  e.operands.push_back(std::move(then_e));
  e.operands.push_back(std::move(cond));
  e.operands.push_back(std::move(else_e));
  return e;
}

Expr Expr::make_list(std::vector<Expr> items) {
  Expr e;
  e.kind = ExprKind::List;
  e.operands = std::move(items);
  return e;
}

Expr Expr::make_dict(std::vector<std::pair<Expr, Expr>> pairs) {
  Expr e;
  e.kind = ExprKind::Dict;
  for (auto &[k, v] : pairs) {
    e.operands.push_back(std::move(k));
    e.operands.push_back(std::move(v));
  }
  return e;
}

Expr Expr::make_subscript(Expr object, Expr index) {
  return make_binary(ExprKind::Subscript, std::move(object), std::move(index));
}

Expr Expr::make_call(Expr callee, std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::Call;
  e.operands.reserve(args.size() + 1);
  e.operands.push_back(std::move(callee));
  for (auto &a : args)
    e.operands.push_back(std::move(a));
  return e;
}

Expr Expr::make_eval_input() {
  Expr e;
  e.kind = ExprKind::EvalInput;
  return e;
}

bool Expr::is_binary() const {
  switch (kind) {
  case ExprKind::Add:
  case ExprKind::And:
  case ExprKind::Or:
  case ExprKind::Eq:
  case ExprKind::NotEq:
  case ExprKind::Is:
    return true;
  default:
    return false;
  }
}

Stmt Stmt::make_print(Expr e) {
  Stmt s;
  s.kind = StmtKind::Print;
  s.exprs.push_back(std::move(e));
  return s;
}

Stmt Stmt::make_assign(Expr target, Expr value) {
  Stmt s;
  s.kind = StmtKind::Assign;
  s.exprs.push_back(std::move(target));
  s.exprs.push_back(std::move(value));
  return s;
}

Stmt Stmt::make_expr(Expr e) {
  Stmt s;
  s.kind = StmtKind::ExprStmt;
  s.exprs.push_back(std::move(e));
  return s;
}

Stmt Stmt::make_return(Expr e) {
  Stmt s;
  s.kind = StmtKind::Return;
  s.exprs.push_back(std::move(e));
  return s;
}

Stmt Stmt::make_def(std::string name, std::vector<std::string> params,
                    std::vector<Stmt> body) {
  Stmt s;
  s.kind = StmtKind::FunctionDef;
  s.name = std::move(name);
  s.params = std::move(params);
  s.body = std::move(body);
  return s;
}

bool operator==(const Expr &a, const Expr &b) {
  return a.kind == b.kind && a.name == b.name && a.value == b.value &&
         a.operands == b.operands;
}

bool operator==(const Stmt &a, const Stmt &b) {
  return a.kind == b.kind && a.exprs == b.exprs && a.name == b.name &&
         a.params == b.params && a.body == b.body;
}

bool operator==(const Program &a, const Program &b) { return a.body == b.body; }

std::size_t ast_size(const Expr &e) {
  std::size_t n = 1;
  for (const Expr &c : e.operands)
    n += ast_size(c);
  return n;
}

std::size_t ast_size(const Stmt &s) {
  std::size_t n = 1 + s.params.size();
  for (const Expr &e : s.exprs)
    n += ast_size(e);
  n += ast_size(s.body);
  return n;
}

std::size_t ast_size(const std::vector<Stmt> &stmts) {
  std::size_t n = 0;
  for (const Stmt &s : stmts)
    n += ast_size(s);
  return n;
}

std::size_t ast_size(const Program &p) { return ast_size(p.body); }

const char *to_string(ExprKind k) {
  switch (k) {
  case ExprKind::Name: return "Name";
  case ExprKind::IntConst: return "IntConst";
  case ExprKind::BoolConst: return "BoolConst";
  case ExprKind::Neg: return "UnaryNeg";
  case ExprKind::Not: return "Not";
  case ExprKind::Add: return "Add";
  case ExprKind::And: return "And";
  case ExprKind::Or: return "Or";
  case ExprKind::Eq: return "Eq";
  case ExprKind::NotEq: return "NotEq";
  case ExprKind::Is: return "Is";
  case ExprKind::Ternary: return "Ternary";
  case ExprKind::List: return "ListDisplay";
  case ExprKind::Dict: return "DictDisplay";
  case ExprKind::Subscript: return "Subscript";
  case ExprKind::Call: return "Call";
  case ExprKind::EvalInput: return "EvalInput";
  }
  return "?";
}

const char *to_string(StmtKind k) {
  switch (k) {
  case StmtKind::Print: return "Print";
  case StmtKind::Assign: return "Assign";
  case StmtKind::ExprStmt: return "ExprStmt";
  case StmtKind::Return: return "Return";
  case StmtKind::FunctionDef: return "FunctionDef";
  }
  return "?";
}

}  // namespace leroy
