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

#include "leroy/vocabulary.hpp"

#include <array>

namespace leroy {
namespace {

using S = SlotKind;

constexpr std::array<S, 0> kNone{};
constexpr std::array<S, 1> kExpr1{S::Expr};
constexpr std::array<S, 2> kExpr2{S::Expr, S::Expr};
constexpr std::array<S, 3> kExpr3{S::Expr, S::Expr, S::Expr};
constexpr std::array<S, 2> kStmtList{S::Stmt, S::StmtSeq};
constexpr std::array<S, 2> kAssign{S::Target, S::Expr};
constexpr std::array<S, 3> kDef{S::Ident, S::ParamSeq, S::StmtSeq};
constexpr std::array<S, 2> kParamList{S::Ident, S::ParamSeq};
constexpr std::array<S, 1> kName{S::Ident};
constexpr std::array<S, 1> kListBody{S::ExprSeq};
constexpr std::array<S, 1> kDictBody{S::DictSeq};
constexpr std::array<S, 2> kExprList{S::Expr, S::ExprSeq};
constexpr std::array<S, 3> kDictList{S::Expr, S::Expr, S::DictSeq};
constexpr std::array<S, 2> kCall{S::Expr, S::ExprSeq};
constexpr std::array<S, 3> kOperatorForm{S::Expr, S::Operator, S::Expr};

const std::array<HeadInfo, 26> kHeads{{
    {"StatementList", S::StmtSeq, kStmtList, 0, true},
    {"print", S::Stmt, kExpr1, 1, true},
    {"assign", S::Stmt, kAssign, 1, true},
    {"expr", S::Stmt, kExpr1, 1, true},
    {"return", S::Stmt, kExpr1, 1, true},
    {"def", S::Stmt, kDef, 1, true},
    {"ParamList", S::ParamSeq, kParamList, 1, true},
    {"name", S::Expr, kName, 1, true},
    {"neg", S::Expr, kExpr1, 1, true},
    {"not", S::Expr, kExpr1, 1, true},
    {"add", S::Expr, kExpr2, 1, true},
    {"and", S::Expr, kExpr2, 1, true},
    {"or", S::Expr, kExpr2, 1, true},
    {"eq", S::Expr, kExpr2, 1, true},
    {"noteq", S::Expr, kExpr2, 1, true},
    {"is", S::Expr, kExpr2, 1, true},
    {"ifexp", S::Expr, kExpr3, 1, true},
    {"list", S::Expr, kListBody, 1, true},
    {"dict", S::Expr, kDictBody, 1, true},
    {"ExprList", S::ExprSeq, kExprList, 0, true},
    {"DictList", S::DictSeq, kDictList, 0, true},
    {"subscript", S::Expr, kExpr2, 1, true},
    {"call", S::Expr, kCall, 1, true},
    {"evalinput", S::Expr, kNone, 1, true},
    // Operator-as-child forms. Never produced by lispify; accepted on input
    // so that candidates abstracting over an operator can be represented and
    // rejected.
    {"compare", S::Expr, kOperatorForm, 1, false},
    {"binop", S::Expr, kOperatorForm, 1, false},
}};

}  // namespace

const HeadInfo *find_head(std::string_view symbol) {
  for (const HeadInfo &h : kHeads)
    if (h.symbol == symbol)
      return &h;
  return nullptr;
}

std::span<const HeadInfo> vocabulary() { return kHeads; }

bool is_spine(SlotKind k) {
  return k == S::StmtSeq || k == S::ExprSeq || k == S::DictSeq || k == S::ParamSeq;
}

std::optional<SlotKind> produced_kind(const SExpr &node) {
  switch (node.kind) {
  case SKind::App:
    if (const HeadInfo *h = find_head(node.text))
      return h->produces;
    return std::nullopt;
  case SKind::Int:
  case SKind::Bool:
    return S::Expr;
  case SKind::Ident:
    return S::Ident;
  case SKind::Op:
    return S::Operator;
  case SKind::Eps:
  case SKind::Hole:
  case SKind::Rest:
    return std::nullopt;
  }
  return std::nullopt;
}

bool fits(SlotKind slot, const SExpr &node) {
  if (node.kind == SKind::Hole || node.kind == SKind::Rest)
    return true;
  if (node.kind == SKind::Eps)
    return is_spine(slot);
  auto kind = produced_kind(node);
  if (!kind)
    return false;
  if (slot == S::Target)
    return node.is_app("name") || node.is_app("subscript");
  return *kind == slot;
}

std::optional<SlotKind> child_slot(const SExpr &parent, std::size_t index) {
  if (parent.kind != SKind::App)
    return std::nullopt;
  const HeadInfo *h = find_head(parent.text);
  if (!h || index >= h->slots.size())
    return std::nullopt;
  return h->slots[index];
}

}  // namespace leroy
