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

#include "leroy/unparse.hpp"

namespace leroy {
namespace {

enum Prec : int {
  kTernary = 0,
  kOr = 1,
  kAnd = 2,
  kNot = 3,
  kCompare = 4,
  kSum = 5,
  kUnary = 6,
  kPostfix = 7,
  kAtom = 8,
};

int precedence(const Expr &e) {
  switch (e.kind) {
  case ExprKind::Ternary: return kTernary;
  case ExprKind::Or: return kOr;
  case ExprKind::And: return kAnd;
  case ExprKind::Not: return kNot;
  case ExprKind::Eq:
  case ExprKind::NotEq:
  case ExprKind::Is: return kCompare;
  case ExprKind::Add: return kSum;
  case ExprKind::Neg: return kUnary;
  case ExprKind::Subscript:
  case ExprKind::Call: return kPostfix;
  default: return kAtom;
  }
}

void emit(const Expr &e, int min_prec, std::string &out);

void emit_list(const std::vector<Expr> &items, std::size_t from, std::string &out) {
  for (std::size_t i = from; i < items.size(); ++i) {
    if (i != from)
      out += ", ";
    emit(items[i], kTernary, out);
  }
}

void emit(const Expr &e, int min_prec, std::string &out) {
  bool paren = precedence(e) < min_prec;
  if (paren)
    out += '(';
  const auto &ops = e.operands;
  switch (e.kind) {
  case ExprKind::Name:
    out += e.name;
    break;
  case ExprKind::IntConst:
    out += std::to_string(e.value);
    break;
  case ExprKind::BoolConst:
    out += e.value ? "True" : "False";
    break;
  case ExprKind::Neg:
    out += '-';
    emit(ops[0], kUnary, out);
    break;
  case ExprKind::Not:
    out += "not ";
    emit(ops[0], kNot, out);
    break;
  case ExprKind::Add:
    emit(ops[0], kSum, out);
    out += " + ";
    emit(ops[1], kUnary, out);
    break;
  case ExprKind::And:
    emit(ops[0], kAnd, out);
    out += " and ";
    emit(ops[1], kNot, out);
    break;
  case ExprKind::Or:
    emit(ops[0], kOr, out);
    out += " or ";
    emit(ops[1], kAnd, out);
    break;
  case ExprKind::Eq:
  case ExprKind::NotEq:
  case ExprKind::Is:
    emit(ops[0], kSum, out);
    out += e.kind == ExprKind::Eq ? " == " : e.kind == ExprKind::NotEq ? " != " : " is ";
    emit(ops[1], kSum, out);
    break;
  case ExprKind::Ternary:
    emit(ops[0], kOr, out);
    out += " if ";
    emit(ops[1], kOr, out);
    out += " else ";
    emit(ops[2], kTernary, out);
    break;
  case ExprKind::List:
    out += '[';
    emit_list(ops, 0, out);
    out += ']';
    break;
  case ExprKind::Dict:
    out += '{';
    for (std::size_t i = 0; i + 1 < ops.size(); i += 2) {
      if (i != 0)
        out += ", ";
      emit(ops[i], kTernary, out);
      out += ": ";
      emit(ops[i + 1], kTernary, out);
    }
    out += '}';
    break;
  case ExprKind::Subscript:
    emit(ops[0], kPostfix, out);
    out += '[';
    emit(ops[1], kTernary, out);
    out += ']';
    break;
  case ExprKind::Call:
    emit(ops[0], kPostfix, out);
    out += '(';
    emit_list(ops, 1, out);
    out += ')';
    break;
  case ExprKind::EvalInput:
    out += "eval(input())";
    break;
  }
  if (paren)
    out += ')';
}

void emit(const Stmt &s, int depth, std::string &out) {
  out.append(static_cast<std::size_t>(depth) * 4, ' ');
  switch (s.kind) {
  case StmtKind::Print:
    out += "print(";
    emit(s.value(), kTernary, out);
    out += ')';
    break;
  case StmtKind::Assign:
    emit(s.target(), kTernary, out);
    out += " = ";
    emit(s.value(), kTernary, out);
    break;
  case StmtKind::ExprStmt:
    emit(s.value(), kTernary, out);
    break;
  case StmtKind::Return:
    out += "return ";
    emit(s.value(), kTernary, out);
    break;
  case StmtKind::FunctionDef:
    out += "def " + s.name + "(";
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      if (i != 0)
        out += ", ";
      out += s.params[i];
    }
    out += "):";
    for (const Stmt &inner : s.body) {
      out += '\n';
      emit(inner, depth + 1, out);
    }
    break;
  }
}

}  // namespace

std::string unparse(const Program &p) {
  std::string out;
  for (std::size_t i = 0; i < p.body.size(); ++i) {
    if (i != 0)
      out += '\n';
    emit(p.body[i], 0, out);
  }
  return out;
}

std::string unparse(const Stmt &s) {
  std::string out;
  emit(s, 0, out);
  return out;
}

std::string unparse(const Expr &e) {
  std::string out;
  emit(e, kTernary, out);
  return out;
}

}  // namespace leroy
