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

#include "leroy/rewrite.hpp"

#include <algorithm>

#include "leroy/parser.hpp"
#include "leroy/unparse.hpp"

namespace leroy {
namespace {

const char kTmp[] = "_leroy_tmp";

// How an argument expression may be moved to the call: stable values can go
// anywhere; others must keep their evaluation time and count.
enum class ArgClass { Stable, Sensitive, Effectful };

bool has_effect(const Expr &e) {
  if (e.kind == ExprKind::Call || e.kind == ExprKind::EvalInput)
    return true;
  return std::any_of(e.operands.begin(), e.operands.end(), has_effect);
}

ArgClass classify(const Expr &e) {
  switch (e.kind) {
  case ExprKind::Name:
  case ExprKind::IntConst:
  case ExprKind::BoolConst:
    return ArgClass::Stable;
  case ExprKind::Neg:
    if (e.operands[0].kind == ExprKind::IntConst)
      return ArgClass::Stable;
    break;
  default:
    break;
  }
  return has_effect(e) ? ArgClass::Effectful : ArgClass::Sensitive;
}

struct Occurrence {
  int param;
  bool lazy;
  bool after_effect;
  bool after_fallible;
};

// Walks the body in Python evaluation order, recording every use of a hole
// parameter and what may have run before it.
class OrderWalk {
public:
  explicit OrderWalk(int arity) : arity_(arity) {}

  void stmt(const Stmt &s) {
    switch (s.kind) {
    case StmtKind::Print:
      expr(s.exprs[0], false);
      effect();
      break;
    case StmtKind::Assign:
      expr(s.value(), false);
      if (s.target().kind == ExprKind::Subscript) {
        expr(s.target().operands[0], false);
        expr(s.target().operands[1], false);
        effect();
      }
      break;
    default:
      expr(s.exprs[0], false);
      break;
    }
  }

  void expr(const Expr &e, bool lazy) {
    switch (e.kind) {
    case ExprKind::Name:
      for (int k = 0; k < arity_; ++k)
        if (e.name == param_name(k))
          occurrences.push_back({k, lazy, effect_, fallible_});
      return;
    case ExprKind::IntConst:
    case ExprKind::BoolConst:
      return;
    case ExprKind::And:
    case ExprKind::Or:
      expr(e.operands[0], lazy);
      expr(e.operands[1], true);
      return;
    case ExprKind::Ternary:
      expr(e.operands[1], lazy);
      expr(e.operands[0], true);
      expr(e.operands[2], true);
      return;
    default:
      break;
    }
    for (const Expr &o : e.operands)
      expr(o, lazy);
    switch (e.kind) {
    case ExprKind::Call:
    case ExprKind::EvalInput:
      effect();
      break;
    case ExprKind::Neg:
    case ExprKind::Add:
    case ExprKind::Dict:
    case ExprKind::Subscript:
      fallible_ = true;
      break;
    default:
      break;
    }
  }

  std::vector<Occurrence> occurrences;

private:
  void effect() { effect_ = fallible_ = true; }

  int arity_;
  bool effect_ = false;
  bool fallible_ = false;
};

std::string order_problem(const ClosedAbstraction &a, const std::vector<Expr> &args) {
  OrderWalk walk(a.hole_params());
  for (const Stmt &s : a.body)
    walk.stmt(s);
  std::vector<ArgClass> cls;
  for (const Expr &e : args)
    cls.push_back(classify(e));
  bool any_effectful = std::count(cls.begin(), cls.end(), ArgClass::Effectful) > 0;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (cls[k] == ArgClass::Stable)
      continue;
    std::string which = "argument " + param_name(static_cast<int>(k));
    if (any_effectful && cls[k] != ArgClass::Effectful)
      return which + " would be evaluated before an effectful argument";
    if (cls[k] == ArgClass::Effectful &&
        std::count(cls.begin(), cls.end(), ArgClass::Effectful) > 1)
      return "more than one effectful argument";
    int uses = 0;
    for (const Occurrence &o : walk.occurrences) {
      if (o.param != static_cast<int>(k))
        continue;
      ++uses;
      if (o.lazy)
        return which + " is only conditionally evaluated in the body";
      if (o.after_effect)
        return which + " is evaluated after an effect in the body";
      if (cls[k] == ArgClass::Effectful && o.after_fallible)
        return which + " has effects but follows an operation that may fail";
    }
    if (uses != 1)
      return which + " is evaluated " + std::to_string(uses) + " times in the body";
  }
  return {};
}

std::vector<Expr> hole_args(const MatchSite &s) {
  std::vector<Expr> out;
  for (const SExpr &b : s.bindings)
    out.push_back(to_expr(b));
  return out;
}

SExpr &walk_path(SExpr &root, const std::vector<int> &path) {
  SExpr *cur = &root;
  for (int i : path)
    cur = &cur->kids.at(static_cast<std::size_t>(i));
  return *cur;
}

int spine_length(const SExpr &s) {
  int n = 0;
  for (const SExpr *cur = &s; cur->is_app("StatementList"); cur = &cur->kids[1])
    ++n;
  return n;
}

}  // namespace

CallSiteCheck validate_call_site(const ClosedAbstraction &a, const MatchSite &s) {
  CallSiteCheck c;
  c.site = s;
  std::vector<Expr> args = hole_args(s);
  for (const Expr &e : args)
    names_of(e, c.argument_names);
  names_of(a.definition(), c.body_names);
  c.body_names.erase(a.name);
  for (const std::string &n : c.argument_names)
    if (c.body_names.count(n)) {
      c.accepted = false;
      c.clash = n;
      c.reason = "argument mentions " + n + ", which the function body also uses";
      return c;
    }
  std::string problem = order_problem(a, args);
  if (!problem.empty()) {
    c.accepted = false;
    c.reason = problem;
  }
  return c;
}

Expr call_expression(const ClosedAbstraction &a, const MatchSite &s) {
  std::vector<Expr> args = hole_args(s);
  for (const std::string &n : a.facts.live_in)
    args.push_back(Expr::make_name(n));
  return Expr::make_call(Expr::make_name(a.name), std::move(args));
}

std::vector<Stmt> call_statements(const ClosedAbstraction &a, const MatchSite &s,
                                  const std::vector<std::string> &needed) {
  Expr call = call_expression(a, s);
  std::vector<Stmt> out;
  if (needed.empty() || a.plan.kind == ReturnPlan::Kind::LastExpr) {
    out.push_back(Stmt::make_expr(std::move(call)));
    return out;
  }
  if (a.plan.kind == ReturnPlan::Kind::Single) {
    out.push_back(Stmt::make_assign(Expr::make_name(a.plan.names[0]), std::move(call)));
    return out;
  }
  auto index_of = [&](const std::string &n) {
    auto it = std::find(a.plan.names.begin(), a.plan.names.end(), n);
    if (it == a.plan.names.end())
      throw InternalError("site needs " + n + " which " + a.name + " does not return");
    return static_cast<std::int64_t>(it - a.plan.names.begin());
  };
  if (needed.size() == 1) {
    out.push_back(Stmt::make_assign(
        Expr::make_name(needed[0]),
        Expr::make_subscript(std::move(call), Expr::make_int(index_of(needed[0])))));
    return out;
  }
  out.push_back(Stmt::make_assign(Expr::make_name(kTmp), std::move(call)));
  for (const std::string &n : needed)
    out.push_back(Stmt::make_assign(
        Expr::make_name(n),
        Expr::make_subscript(Expr::make_name(kTmp), Expr::make_int(index_of(n)))));
  return out;
}

std::vector<Program> apply(const ClosedAbstraction &a, const std::vector<MatchSite> &sites,
                           const std::vector<std::vector<std::string>> &needed,
                           const std::vector<SExpr> &programs) {
  std::vector<SExpr> work = programs;
  std::vector<std::size_t> order(sites.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  // Deepest and rightmost first, so earlier paths stay valid.
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (sites[x].program != sites[y].program)
      return sites[x].program < sites[y].program;
    return sites[x].path > sites[y].path;
  });

  bool spine = a.pattern.root_kind() == RootKind::Spine;
  int length = spine ? spine_length(a.pattern.body) : 0;
  for (std::size_t i : order) {
    const MatchSite &s = sites[i];
    std::set<std::string> arg_names;
    for (const Expr &e : hole_args(s))
      names_of(e, arg_names);
    std::set<std::string> body_names;
    names_of(a.definition(), body_names);
    body_names.erase(a.name);
    for (const std::string &n : arg_names)
      if (body_names.count(n))
        throw InternalError("call to " + a.name + " would capture " + n);

    SExpr &target = walk_path(work.at(static_cast<std::size_t>(s.program)), s.path);
    if (!spine) {
      target = lispify(call_expression(a, s));
      continue;
    }
    SExpr remainder = target;
    for (int k = 0; k < length; ++k)
      remainder = SExpr(remainder.kids.at(1));
    SExpr replacement = lispify_statements(call_statements(a, s, needed.at(i)));
    SExpr *tail = &replacement;
    while (tail->is_app("StatementList"))
      tail = &tail->kids[1];
    *tail = std::move(remainder);
    target = std::move(replacement);
  }

  std::vector<Program> out;
  for (std::size_t p = 0; p < work.size(); ++p) {
    auto back = delispify(work[p]);
    if (!std::holds_alternative<Program>(back))
      throw InternalError("rewritten program " + std::to_string(p) + " is not a program");
    Program prog = std::get<Program>(std::move(back));
    std::string text = unparse(prog);
    Program again;
    try {
      again = parse_program(text, "<rewritten " + std::to_string(p) + ">");
    } catch (const SyntaxError &e) {
      throw InternalError(std::string("rewritten program does not parse: ") + e.what());
    }
    if (!(again == prog))
      throw InternalError("rewritten program " + std::to_string(p) + " changes when re-parsed");
    out.push_back(std::move(prog));
  }
  return out;
}

Program with_definitions(const Program &p, const std::vector<ClosedAbstraction> &library) {
  std::set<std::string> names;
  for (const Stmt &s : p.body)
    names_of(s, names);
  Program out;
  for (const ClosedAbstraction &a : library)
    if (names.count(a.name))
      out.body.push_back(a.definition());
  out.body.insert(out.body.end(), p.body.begin(), p.body.end());
  return out;
}

Program library_program(const std::vector<ClosedAbstraction> &library) {
  Program out;
  for (const ClosedAbstraction &a : library)
    out.body.push_back(a.definition());
  return out;
}

CompressionReport measure(const std::vector<Program> &before, const std::vector<Program> &after,
                          const std::vector<ClosedAbstraction> &library) {
  CompressionReport r;
  for (const Program &p : before)
    r.original_nodes += ast_size(p);
  for (const Program &p : after)
    r.rewritten_nodes += ast_size(p);
  r.rewritten_plus_library_nodes = r.rewritten_nodes;
  for (const ClosedAbstraction &a : library)
    r.rewritten_plus_library_nodes += ast_size(a.definition());
  if (r.rewritten_nodes > 0)
    r.compression_ratio =
        static_cast<double>(r.original_nodes) / static_cast<double>(r.rewritten_nodes);
  if (r.original_nodes > 0)
    r.library_growth_pct = 100.0 *
                           (static_cast<double>(r.rewritten_plus_library_nodes) -
                            static_cast<double>(r.original_nodes)) /
                           static_cast<double>(r.original_nodes);
  return r;
}

}  // namespace leroy
