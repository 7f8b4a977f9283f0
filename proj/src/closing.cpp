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

#include "leroy/closing.hpp"

#include <algorithm>

namespace leroy {
namespace {

bool is_param_name(const std::string &n) {
  if (!n.starts_with("_param") || n.size() == 6)
    return false;
  return std::all_of(n.begin() + 6, n.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void add_unique(std::vector<std::string> &v, const std::string &n) {
  if (std::find(v.begin(), v.end(), n) == v.end())
    v.push_back(n);
}

void idents_of(const SExpr &s, std::vector<std::string> &out) {
  if (s.kind == SKind::Ident)
    out.push_back(s.text);
  for (const SExpr &k : s.kids)
    idents_of(k, out);
}

// Names a def body reads from the enclosing (global) scope.
void global_reads(const Stmt &def, std::set<std::string> &out) {
  std::set<std::string> local(def.params.begin(), def.params.end());
  for (const Stmt &s : def.body)
    if (s.kind == StmtKind::Assign && s.target().kind == ExprKind::Name)
      local.insert(s.target().name);
  std::vector<std::string> reads;
  for (const Stmt &s : def.body)
    reads_of(s, reads);
  for (const std::string &r : reads)
    if (!local.count(r))
      out.insert(r);
}

std::vector<Stmt> spine_stmts(const SExpr &s) {
  if (s.is_app("StatementList"))
    return to_stmts(s);
  return {};
}

}  // namespace

const char *to_string(ReturnPlan::Kind k) {
  switch (k) {
  case ReturnPlan::Kind::Single: return "single";
  case ReturnPlan::Kind::Multiple: return "multiple";
  case ReturnPlan::Kind::LastExpr: return "last_expr";
  }
  return "?";
}

void reads_of(const Expr &e, std::vector<std::string> &out) {
  if (e.kind == ExprKind::Name) {
    out.push_back(e.name);
    return;
  }
  if (e.kind == ExprKind::Ternary) {
    reads_of(e.operands[1], out);
    reads_of(e.operands[0], out);
    reads_of(e.operands[2], out);
    return;
  }
  for (const Expr &o : e.operands)
    reads_of(o, out);
}

void reads_of(const Stmt &s, std::vector<std::string> &out) {
  switch (s.kind) {
  case StmtKind::Assign:
    reads_of(s.value(), out);
    if (s.target().kind == ExprKind::Subscript)
      for (const Expr &o : s.target().operands)
        reads_of(o, out);
    break;
  case StmtKind::FunctionDef:
    for (const Stmt &b : s.body)
      reads_of(b, out);
    break;
  default:
    reads_of(s.exprs[0], out);
    break;
  }
}

void names_of(const Expr &e, std::set<std::string> &out) {
  if (e.kind == ExprKind::Name)
    out.insert(e.name);
  for (const Expr &o : e.operands)
    names_of(o, out);
}

void names_of(const Stmt &s, std::set<std::string> &out) {
  for (const Expr &e : s.exprs)
    names_of(e, out);
  if (s.kind == StmtKind::FunctionDef) {
    out.insert(s.name);
    out.insert(s.params.begin(), s.params.end());
    for (const Stmt &b : s.body)
      names_of(b, out);
  }
}

LivenessFacts analyze_liveness(const Candidate &c, const std::vector<SExpr> &corpus) {
  LivenessFacts f;
  const Pattern &pat = c.pattern;
  auto note_read = [&](const std::string &n) {
    if (is_param_name(n) || n == "print")
      return;
    if (std::find(f.assigned.begin(), f.assigned.end(), n) == f.assigned.end())
      add_unique(f.live_in, n);
  };

  if (pat.root_kind() == RootKind::Expr) {
    std::vector<std::string> reads;
    reads_of(to_expr(pat.body), reads);
    for (const std::string &r : reads)
      note_read(r);
    f.live_out_per_site.resize(c.sites.size());
    return f;
  }

  for (const Stmt &s : to_stmts(pat.body)) {
    std::vector<std::string> reads;
    reads_of(s, reads);
    for (const std::string &r : reads)
      note_read(r);
    if (s.kind != StmtKind::Assign)
      continue;
    const Expr &t = s.target();
    if (t.kind == ExprKind::Name)
      add_unique(f.assigned, t.name);
    else if (t.operands[0].kind == ExprKind::Name && !is_param_name(t.operands[0].name))
      add_unique(f.assigned, t.operands[0].name);
  }

  for (const MatchSite &site : c.sites) {
    std::set<std::string> after;
    if (site.tail_rest)
      for (const Stmt &s : spine_stmts(*site.tail_rest)) {
        std::vector<std::string> reads;
        reads_of(s, reads);
        after.insert(reads.begin(), reads.end());
      }
    const SExpr *cur = &corpus.at(static_cast<std::size_t>(site.program));
    bool in_def = false;
    for (int i : site.path) {
      in_def = in_def || cur->is_app("def");
      cur = &cur->kids.at(static_cast<std::size_t>(i));
    }
    if (!in_def)
      for (const Stmt &s : spine_stmts(corpus.at(static_cast<std::size_t>(site.program))))
        if (s.kind == StmtKind::FunctionDef)
          global_reads(s, after);
    std::vector<std::string> out;
    for (const std::string &a : f.assigned)
      if (after.count(a))
        out.push_back(a);
    std::sort(out.begin(), out.end());
    f.live_out_per_site.push_back(std::move(out));
  }
  return f;
}

ClosedAbstraction close(const Candidate &c, const LivenessFacts &facts, const std::string &name) {
  ClosedAbstraction a;
  a.name = name;
  a.pattern = c.pattern;
  a.facts = facts;

  std::vector<std::string> idents;
  idents_of(c.pattern.body, idents);
  for (const std::string &n : idents)
    if (is_param_name(n))
      throw ClosureFailure("body identifier " + n + " collides with a generated parameter");

  for (int k = 0; k < c.pattern.arity; ++k)
    a.params.push_back(param_name(k));
  for (const std::string &n : facts.live_in)
    a.params.push_back(n);

  if (c.pattern.root_kind() == RootKind::Expr) {
    a.body.push_back(Stmt::make_return(to_expr(c.pattern.body)));
    a.plan.kind = ReturnPlan::Kind::LastExpr;
    return a;
  }

  a.body = to_stmts(c.pattern.body);
  std::set<std::string> outs;
  for (const auto &site : facts.live_out_per_site)
    outs.insert(site.begin(), site.end());
  a.plan.names.assign(outs.begin(), outs.end());
  if (a.plan.names.size() == 1) {
    a.plan.kind = ReturnPlan::Kind::Single;
    a.body.push_back(Stmt::make_return(Expr::make_name(a.plan.names[0])));
  } else if (a.plan.names.size() > 1) {
    a.plan.kind = ReturnPlan::Kind::Multiple;
    std::vector<Expr> items;
    for (const std::string &n : a.plan.names)
      items.push_back(Expr::make_name(n));
    a.body.push_back(Stmt::make_return(Expr::make_list(std::move(items))));
  } else {
    a.plan.kind = ReturnPlan::Kind::LastExpr;
    Stmt &last = a.body.back();
    switch (last.kind) {
    case StmtKind::Print:
      last = Stmt::make_return(
          Expr::make_call(Expr::make_name("print"), {std::move(last.exprs[0])}));
      break;
    case StmtKind::ExprStmt:
      last = Stmt::make_return(std::move(last.exprs[0]));
      break;
    case StmtKind::Assign:
      if (last.target().kind == ExprKind::Name)
        a.body.push_back(Stmt::make_return(Expr::make_name(last.target().name)));
      break;
    default:
      break;
    }
  }
  return a;
}

}  // namespace leroy
