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

#include "leroy/sexpr.hpp"

#include <cctype>
#include <charconv>

#include "leroy/vocabulary.hpp"

namespace leroy {

SExpr SExpr::app(std::string head, std::vector<SExpr> kids) {
  SExpr s;
  s.kind = SKind::App;
  s.text = std::move(head);
  s.kids = std::move(kids);
  return s;
}

SExpr SExpr::integer(std::int64_t v) {
  SExpr s;
  s.kind = SKind::Int;
  s.value = v;
  return s;
}

SExpr SExpr::boolean(bool v) {
  SExpr s;
  s.kind = SKind::Bool;
  s.value = v ? 1 : 0;
  return s;
}

SExpr SExpr::ident(std::string name) {
  SExpr s;
  s.kind = SKind::Ident;
  s.text = std::move(name);
  return s;
}

SExpr SExpr::op(std::string spelling) {
  SExpr s;
  s.kind = SKind::Op;
  s.text = std::move(spelling);
  return s;
}

SExpr SExpr::hole(int index) {
  SExpr s;
  s.kind = SKind::Hole;
  s.value = index;
  return s;
}

SExpr SExpr::rest() {
  SExpr s;
  s.kind = SKind::Rest;
  return s;
}

SExpr SExpr::eps() { return SExpr{}; }

std::string param_name(int hole_index) {
  return "_param" + std::to_string(hole_index);
}

const char *to_string(SlotKind k) {
  switch (k) {
  case SlotKind::Expr: return "expression";
  case SlotKind::Target: return "assignment target";
  case SlotKind::Stmt: return "statement";
  case SlotKind::StmtSeq: return "statement-list tail";
  case SlotKind::ExprSeq: return "expression-list tail";
  case SlotKind::DictSeq: return "dict-entry tail";
  case SlotKind::ParamSeq: return "parameter list";
  case SlotKind::Ident: return "identifier";
  case SlotKind::Operator: return "operator";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

void write(const SExpr &s, std::string &out) {
  switch (s.kind) {
  case SKind::App:
    out += '(';
    out += s.text;
    for (const SExpr &k : s.kids) {
      out += ' ';
      write(k, out);
    }
    out += ')';
    break;
  case SKind::Int:
    out += std::to_string(s.value);
    break;
  case SKind::Bool:
    out += s.value ? "True" : "False";
    break;
  case SKind::Ident:
  case SKind::Op:
    out += s.text;
    break;
  case SKind::Hole:
    out += '#';
    out += std::to_string(s.value);
    break;
  case SKind::Rest:
    out += "#rest";
    break;
  case SKind::Eps:
    out += "eps";
    break;
  }
}

class SExprReader {
public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  SExpr read_all() {
    SExpr s = read(std::nullopt);
    skip_space();
    if (pos_ != text_.size())
      fail("trailing text after s-expression");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw SExprError("s-expression offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_)
      fail("expected a symbol");
    return text_.substr(start, pos_ - start);
  }

  SExpr read(std::optional<SlotKind> slot) {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    if (text_[pos_] == ')')
      fail("unexpected ')'");
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      SExpr app = SExpr::app(std::string(word()));
      const HeadInfo *head = find_head(app.text);
      while (true) {
        skip_space();
        if (pos_ >= text_.size())
          fail("unterminated '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return app;
        }
        std::optional<SlotKind> child;
        if (head && app.kids.size() < head->slots.size())
          child = head->slots[app.kids.size()];
        app.kids.push_back(read(child));
      }
    }
    return atom(word(), slot);
  }

  SExpr atom(std::string_view w, std::optional<SlotKind> slot) {
    if (w.size() > 1 && w[0] == '#') {
      if (w == "#rest")
        return SExpr::rest();
      int k = 0;
      auto [p, ec] = std::from_chars(w.data() + 1, w.data() + w.size(), k);
      if (ec != std::errc() || p != w.data() + w.size() || k < 0)
        fail("bad hole '" + std::string(w) + "'");
      return SExpr::hole(k);
    }
    if (slot == SlotKind::Ident)
      return SExpr::ident(std::string(w));
    if (w == "eps")
      return SExpr::eps();
    if (w == "True" || w == "False")
      return SExpr::boolean(w == "True");
    if (w == "==" || w == "!=" || w == "+" || w == "is" || w == "and" ||
        w == "or" || w == "not")
      return SExpr::op(std::string(w));
    if (std::isdigit(static_cast<unsigned char>(w[0]))) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || p != w.data() + w.size())
        fail("bad integer '" + std::string(w) + "'");
      return SExpr::integer(v);
    }
    return SExpr::ident(std::string(w));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const SExpr &s) {
  std::string out;
  write(s, out);
  return out;
}

SExpr parse_sexpr(std::string_view text) { return SExprReader(text).read_all(); }

std::size_t sexpr_ast_size(const SExpr &s) {
  switch (s.kind) {
  case SKind::App: {
    const HeadInfo *h = find_head(s.text);
    std::size_t n = h ? static_cast<std::size_t>(h->weight) : 1;
    for (const SExpr &k : s.kids)
      n += sexpr_ast_size(k);
    return n;
  }
  case SKind::Int:
  case SKind::Bool:
  case SKind::Hole:
    return 1;
  default:
    return 0;
  }
}

// ---------------------------------------------------------------------------
// Lispify.

namespace {

SExpr expr_spine(const std::vector<Expr> &items, std::size_t from) {
  SExpr tail = SExpr::eps();
  for (std::size_t i = items.size(); i > from; --i)
    tail = SExpr::app("ExprList", {lispify(items[i - 1]), std::move(tail)});
  return tail;
}

const char *binary_head(ExprKind k) {
  switch (k) {
  case ExprKind::Add: return "add";
  case ExprKind::And: return "and";
  case ExprKind::Or: return "or";
  case ExprKind::Eq: return "eq";
  case ExprKind::NotEq: return "noteq";
  case ExprKind::Is: return "is";
  default: return nullptr;
  }
}

}  // namespace

SExpr lispify(const Expr &e) {
  const auto &ops = e.operands;
  switch (e.kind) {
  case ExprKind::Name:
    return SExpr::app("name", {SExpr::ident(e.name)});
  case ExprKind::IntConst:
    return SExpr::integer(e.value);
  case ExprKind::BoolConst:
    return SExpr::boolean(e.value != 0);
  case ExprKind::Neg:
    return SExpr::app("neg", {lispify(ops[0])});
  case ExprKind::Not:
    return SExpr::app("not", {lispify(ops[0])});
  case ExprKind::Add:
  case ExprKind::And:
  case ExprKind::Or:
  case ExprKind::Eq:
  case ExprKind::NotEq:
  case ExprKind::Is:
    return SExpr::app(binary_head(e.kind), {lispify(ops[0]), lispify(ops[1])});
  case ExprKind::Ternary:
    return SExpr::app("ifexp", {lispify(ops[0]), lispify(ops[1]), lispify(ops[2])});
  case ExprKind::List:
    return SExpr::app("list", {expr_spine(ops, 0)});
  case ExprKind::Dict: {
    SExpr tail = SExpr::eps();
    for (std::size_t i = ops.size(); i >= 2; i -= 2)
      tail = SExpr::app("DictList", {lispify(ops[i - 2]), lispify(ops[i - 1]), std::move(tail)});
    return SExpr::app("dict", {std::move(tail)});
  }
  case ExprKind::Subscript:
    return SExpr::app("subscript", {lispify(ops[0]), lispify(ops[1])});
  case ExprKind::Call:
    return SExpr::app("call", {lispify(ops[0]), expr_spine(ops, 1)});
  case ExprKind::EvalInput:
    return SExpr::app("evalinput");
  }
  return SExpr::eps();
}

SExpr lispify(const Stmt &s) {
  switch (s.kind) {
  case StmtKind::Print:
    return SExpr::app("print", {lispify(s.value())});
  case StmtKind::Assign:
    return SExpr::app("assign", {lispify(s.target()), lispify(s.value())});
  case StmtKind::ExprStmt:
    return SExpr::app("expr", {lispify(s.value())});
  case StmtKind::Return:
    return SExpr::app("return", {lispify(s.value())});
  case StmtKind::FunctionDef: {
    SExpr params = SExpr::eps();
    for (auto it = s.params.rbegin(); it != s.params.rend(); ++it)
      params = SExpr::app("ParamList", {SExpr::ident(*it), std::move(params)});
    return SExpr::app("def", {SExpr::ident(s.name), std::move(params),
                              lispify_statements(s.body)});
  }
  }
  return SExpr::eps();
}

SExpr lispify_statements(const std::vector<Stmt> &stmts) {
  SExpr tail = SExpr::eps();
  for (auto it = stmts.rbegin(); it != stmts.rend(); ++it)
    tail = SExpr::app("StatementList", {lispify(*it), std::move(tail)});
  return tail;
}

SExpr lispify(const Program &p) { return lispify_statements(p.body); }

// ---------------------------------------------------------------------------
// Shape analysis.

namespace {

bool valid_operator(std::string_view head, std::string_view op) {
  if (head == "compare")
    return op == "==" || op == "!=" || op == "is";
  return op == "+" || op == "and" || op == "or";
}

class ShapeWalker {
public:
  explicit ShapeWalker(PartialTree &out) : out_(out) {}

  void walk(const SExpr &node, std::vector<int> &path, bool on_root_spine) {
    if (node.kind != SKind::App)
      return;
    const HeadInfo *head = find_head(node.text);
    if (!head)
      throw SExprError("unknown symbol '" + node.text + "'");
    std::size_t n = std::min(node.kids.size(), head->slots.size());
    for (std::size_t i = node.kids.size(); i < head->slots.size(); ++i)
      issue(ShapeIssue::Kind::MissingChild, path,
            "'" + node.text + "' is missing child " + std::to_string(i + 1) +
                " (" + to_string(head->slots[i]) + ")");
    for (std::size_t i = head->slots.size(); i < node.kids.size(); ++i)
      issue(ShapeIssue::Kind::ExtraChild, path,
            "'" + node.text + "' has unexpected child " + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
      const SExpr &kid = node.kids[i];
      SlotKind slot = head->slots[i];
      path.push_back(static_cast<int>(i));
      bool kid_on_spine = on_root_spine && node.text == "StatementList" && i == 1;
      if (!fits(slot, kid)) {
        issue(ShapeIssue::Kind::WrongKind, path,
              "'" + to_string(kid) + "' cannot fill the " + to_string(slot) +
                  " slot of '" + node.text + "'");
      } else if (kid.kind == SKind::Hole) {
        out_.holes.push_back(HoleSite{static_cast<int>(kid.value), slot, path, kid_on_spine});
      } else if (kid.kind == SKind::Rest) {
        if (kid_on_spine)
          out_.open_tails.push_back(HoleSite{-1, slot, path, true});
        else
          issue(ShapeIssue::Kind::MisplacedRest, path,
                "open tail under '" + node.text + "' is not on the root statement spine");
      } else if (kid.kind == SKind::Op && !valid_operator(node.text, kid.text)) {
        issue(ShapeIssue::Kind::WrongKind, path,
              "'" + kid.text + "' is not an operator of '" + node.text + "'");
      } else if (node.text == "def" && i == 2 && kid.kind == SKind::Eps) {
        issue(ShapeIssue::Kind::EmptySuite, path, "function body is empty");
      }
      walk(kid, path, kid_on_spine);
      path.pop_back();
    }
  }

  void issue(ShapeIssue::Kind k, const std::vector<int> &path, std::string detail) {
    out_.issues.push_back(ShapeIssue{k, path, std::move(detail)});
  }

private:
  PartialTree &out_;
};

}  // namespace

PartialTree analyze_shape(const SExpr &s) {
  PartialTree out;
  switch (s.kind) {
  case SKind::Hole:
    out.root_kind = SlotKind::Expr;
    out.holes.push_back(HoleSite{static_cast<int>(s.value), SlotKind::Expr, {}, false});
    return out;
  case SKind::Rest:
    out.root_kind = SlotKind::StmtSeq;
    out.issues.push_back({ShapeIssue::Kind::MisplacedRest, {}, "pattern is only an open tail"});
    return out;
  case SKind::Eps:
    out.root_kind = SlotKind::StmtSeq;
    return out;
  default:
    break;
  }
  if (s.kind == SKind::App && !find_head(s.text))
    throw SExprError("unknown symbol '" + s.text + "'");
  out.root_kind = *produced_kind(s);
  std::vector<int> path;
  ShapeWalker(out).walk(s, path, s.is_app("StatementList"));
  return out;
}

std::variant<Program, PartialTree> delispify(const SExpr &s) {
  PartialTree shape = analyze_shape(s);
  if (!shape.complete() || shape.root_kind != SlotKind::StmtSeq)
    return shape;
  if (s.kind == SKind::Eps) {
    shape.issues.push_back({ShapeIssue::Kind::EmptySuite, {}, "program has no statements"});
    return shape;
  }
  return Program{to_stmts(s)};
}

// ---------------------------------------------------------------------------
// Fragment conversion.

namespace {

[[noreturn]] void malformed(const SExpr &s, const std::string &why) {
  throw SExprError("cannot convert '" + to_string(s) + "': " + why);
}

void need(const SExpr &s, std::size_t arity) {
  if (s.kids.size() != arity)
    malformed(s, "expected " + std::to_string(arity) + " children");
}

std::vector<Expr> expr_items(const SExpr &spine) {
  std::vector<Expr> items;
  const SExpr *cur = &spine;
  while (cur->is_app("ExprList")) {
    need(*cur, 2);
    items.push_back(to_expr(cur->kids[0]));
    cur = &cur->kids[1];
  }
  if (cur->kind != SKind::Eps)
    malformed(*cur, "expression list must end in eps");
  return items;
}

std::string ident_of(const SExpr &s) {
  if (s.kind != SKind::Ident)
    malformed(s, "expected an identifier");
  return s.text;
}

}  // namespace

Expr to_expr(const SExpr &s) {
  switch (s.kind) {
  case SKind::Int:
    return Expr::make_int(s.value);
  case SKind::Bool:
    return Expr::make_bool(s.value != 0);
  case SKind::Hole:
    return Expr::make_name(param_name(static_cast<int>(s.value)));
  case SKind::App:
    break;
  default:
    malformed(s, "not an expression");
  }
  const std::string &h = s.text;
  if (h == "name") {
    need(s, 1);
    return Expr::make_name(ident_of(s.kids[0]));
  }
  if (h == "neg" || h == "not") {
    need(s, 1);
    return Expr::make_unary(h == "neg" ? ExprKind::Neg : ExprKind::Not, to_expr(s.kids[0]));
  }
  static const std::pair<const char *, ExprKind> kBinary[] = {
      {"add", ExprKind::Add},  {"and", ExprKind::And},     {"or", ExprKind::Or},
      {"eq", ExprKind::Eq},    {"noteq", ExprKind::NotEq}, {"is", ExprKind::Is},
      {"subscript", ExprKind::Subscript}};
  for (const auto &[sym, kind] : kBinary) {
    if (h == sym) {
      need(s, 2);
      return Expr::make_binary(kind, to_expr(s.kids[0]), to_expr(s.kids[1]));
    }
  }
  if (h == "compare" || h == "binop") {
    need(s, 3);
    const SExpr &op = s.kids[1];
    if (op.kind != SKind::Op || !valid_operator(h, op.text))
      malformed(s, "operator slot does not hold an operator");
    ExprKind kind = op.text == "==" ? ExprKind::Eq
                    : op.text == "!=" ? ExprKind::NotEq
                    : op.text == "is" ? ExprKind::Is
                    : op.text == "+" ? ExprKind::Add
                    : op.text == "and" ? ExprKind::And
                                       : ExprKind::Or;
    return Expr::make_binary(kind, to_expr(s.kids[0]), to_expr(s.kids[2]));
  }
  if (h == "ifexp") {
    need(s, 3);
    return Expr::make_ternary(to_expr(s.kids[0]), to_expr(s.kids[1]), to_expr(s.kids[2]));
  }
  if (h == "list") {
    need(s, 1);
    return Expr::make_list(expr_items(s.kids[0]));
  }
  if (h == "dict") {
    need(s, 1);
    std::vector<std::pair<Expr, Expr>> pairs;
    const SExpr *cur = &s.kids[0];
    while (cur->is_app("DictList")) {
      need(*cur, 3);
      pairs.emplace_back(to_expr(cur->kids[0]), to_expr(cur->kids[1]));
      cur = &cur->kids[2];
    }
    if (cur->kind != SKind::Eps)
      malformed(*cur, "dict entries must end in eps");
    return Expr::make_dict(std::move(pairs));
  }
  if (h == "call") {
    need(s, 2);
    return Expr::make_call(to_expr(s.kids[0]), expr_items(s.kids[1]));
  }
  if (h == "evalinput") {
    need(s, 0);
    return Expr::make_eval_input();
  }
  if (!find_head(h))
    throw SExprError("unknown symbol '" + h + "'");
  malformed(s, "not an expression");
}

Stmt to_stmt(const SExpr &s) {
  if (s.kind != SKind::App)
    malformed(s, "not a statement");
  const std::string &h = s.text;
  if (h == "print") {
    need(s, 1);
    return Stmt::make_print(to_expr(s.kids[0]));
  }
  if (h == "assign") {
    need(s, 2);
    Expr target = to_expr(s.kids[0]);
    if (target.kind != ExprKind::Name && target.kind != ExprKind::Subscript)
      malformed(s, "assignment target must be a name or subscription");
    return Stmt::make_assign(std::move(target), to_expr(s.kids[1]));
  }
  if (h == "expr") {
    need(s, 1);
    return Stmt::make_expr(to_expr(s.kids[0]));
  }
  if (h == "return") {
    need(s, 1);
    return Stmt::make_return(to_expr(s.kids[0]));
  }
  if (h == "def") {
    need(s, 3);
    std::vector<std::string> params;
    const SExpr *cur = &s.kids[1];
    while (cur->is_app("ParamList")) {
      need(*cur, 2);
      params.push_back(ident_of(cur->kids[0]));
      cur = &cur->kids[1];
    }
    if (cur->kind != SKind::Eps)
      malformed(*cur, "parameter list must end in eps");
    std::vector<Stmt> body = to_stmts(s.kids[2]);
    if (body.empty())
      malformed(s, "function body is empty");
    return Stmt::make_def(ident_of(s.kids[0]), std::move(params), std::move(body));
  }
  if (!find_head(h))
    throw SExprError("unknown symbol '" + h + "'");
  malformed(s, "not a statement");
}

std::vector<Stmt> to_stmts(const SExpr &spine) {
  std::vector<Stmt> out;
  const SExpr *cur = &spine;
  while (cur->is_app("StatementList")) {
    need(*cur, 2);
    out.push_back(to_stmt(cur->kids[0]));
    cur = &cur->kids[1];
  }
  if (cur->kind != SKind::Eps && cur->kind != SKind::Rest)
    malformed(*cur, "statement list must end in eps");
  return out;
}

}  // namespace leroy
