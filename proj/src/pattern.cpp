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

#include "leroy/pattern.hpp"

#include "leroy/vocabulary.hpp"

namespace leroy {
namespace {

void collect_holes(const SExpr &s, std::vector<int> &order, bool &rest) {
  if (s.kind == SKind::Hole) {
    int k = static_cast<int>(s.value);
    for (int seen : order)
      if (seen == k)
        return;
    order.push_back(k);
    return;
  }
  if (s.kind == SKind::Rest)
    rest = true;
  for (const SExpr &k : s.kids)
    collect_holes(k, order, rest);
}

}  // namespace

Pattern Pattern::from_sexpr(SExpr body) {
  if (body.kind == SKind::Hole || body.kind == SKind::Rest)
    throw SExprError("pattern body cannot be a single hole");
  // A lone statement stands for a one-statement prefix of its spine.
  if (produced_kind(body) == SlotKind::Stmt)
    body = SExpr::app("StatementList", {std::move(body), SExpr::rest()});
  Pattern p;
  bool rest = false;
  collect_holes(body, p.hole_order, rest);
  for (std::size_t i = 0; i < p.hole_order.size(); ++i)
    if (p.hole_order[i] != static_cast<int>(i))
      throw SExprError("holes must be numbered 0.." +
                       std::to_string(p.hole_order.size() - 1) +
                       " in order of first occurrence, found #" +
                       std::to_string(p.hole_order[i]) + " at position " +
                       std::to_string(i));
  p.arity = static_cast<int>(p.hole_order.size());
  p.body = std::move(body);
  return p;
}

RootKind Pattern::root_kind() const {
  return body.is_app("StatementList") ? RootKind::Spine : RootKind::Expr;
}

bool Pattern::open_tail() const {
  const SExpr *cur = &body;
  while (cur->is_app("StatementList") && cur->kids.size() == 2)
    cur = &cur->kids[1];
  return cur->kind == SKind::Rest;
}

SExpr instantiate(const SExpr &body, const std::vector<SExpr> &args) {
  if (body.kind == SKind::Hole)
    return args.at(static_cast<std::size_t>(body.value));
  if (body.kind == SKind::Rest)
    return SExpr::eps();
  SExpr out = body;
  for (SExpr &k : out.kids)
    k = instantiate(k, args);
  return out;
}

}  // namespace leroy
