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

#include "leroy/parser.hpp"

#include <charconv>
#include <set>
#include <vector>

namespace leroy {
namespace {

enum class Tok { Name, Int, Keyword, Op, Newline, Indent, Dedent, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  int end_line;
  int end_col;
};

const std::set<std::string, std::less<>> kPythonKeywords = {
    "False", "None",   "True",    "and",      "as",     "assert", "async",
    "await", "break",  "class",   "continue", "def",    "del",    "elif",
    "else",  "except", "finally", "for",      "from",   "global", "if",
    "import", "in",    "is",      "lambda",   "nonlocal", "not",  "or",
    "pass",  "raise",  "return",  "try",      "while",  "with",   "yield"};

class Lexer {
public:
  Lexer(std::string_view src, const std::string &file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    indents_.push_back(0);
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      if (at_line_start && depth_ == 0) {
        if (!handle_indentation())
          continue;  // blank or comment-only line
        at_line_start = false;
      }
      char c = src_[pos_];
      if (c == '\n') {
        if (depth_ == 0) {
          push(Tok::Newline, "\n", line_, col_, line_, col_ + 1);
          at_line_start = true;
        }
        advance_line();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        advance();
        continue;
      }
      if (c == '#') {
        skip_comment();
        continue;
      }
      if (c == '\\')
        fail(line_, col_, "line continuation is not supported");
      if (c == '"' || c == '\'')
        fail(line_, col_, "string literals are not supported");
      if (is_ident_start(c)) {
        lex_word();
        continue;
      }
      if (c >= '0' && c <= '9') {
        lex_number();
        continue;
      }
      lex_operator();
    }
    if (depth_ != 0)
      fail(line_, col_, "unexpected end of input inside brackets");
    if (!tokens_.empty() && tokens_.back().kind != Tok::Newline &&
        tokens_.back().kind != Tok::Dedent)
      push(Tok::Newline, "\n", line_, col_, line_, col_);
    while (indents_.size() > 1) {
      indents_.pop_back();
      push(Tok::Dedent, "", line_, col_, line_, col_);
    }
    push(Tok::End, "", line_, col_, line_, col_);
    return std::move(tokens_);
  }

private:
  [[noreturn]] void fail(int line, int col, const std::string &msg) const {
    throw SyntaxError(file_, line, col, msg);
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
  }

  void advance() {
    ++pos_;
    ++col_;
  }
  void advance_line() {
    ++pos_;
    ++line_;
    col_ = 1;
  }

  void skip_comment() {
    while (pos_ < src_.size() && src_[pos_] != '\n')
      advance();
  }

  // Measures leading whitespace and emits INDENT/DEDENT. Returns false when
  // the line carries no tokens.
  bool handle_indentation() {
    int width = 0;
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                  src_[pos_] == '\f' || src_[pos_] == '\r')) {
      if (src_[pos_] == '\t')
        width = (width / 8 + 1) * 8;
      else if (src_[pos_] == ' ')
        ++width;
      advance();
    }
    if (pos_ >= src_.size())
      return true;
    if (src_[pos_] == '\n') {
      advance_line();
      return false;
    }
    if (src_[pos_] == '#') {
      skip_comment();
      if (pos_ < src_.size())
        advance_line();
      return false;
    }
    if (width > indents_.back()) {
      if (tokens_.empty())
        fail(line_, col_, "unexpected indent");
      indents_.push_back(width);
      push(Tok::Indent, "", line_, 1, line_, col_);
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        push(Tok::Dedent, "", line_, col_, line_, col_);
      }
      if (width != indents_.back())
        fail(line_, col_, "unindent does not match any outer indentation level");
    }
    return true;
  }

  void lex_word() {
    int l = line_, c0 = col_;
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_]))
      advance();
    std::string word(src_.substr(start, pos_ - start));
    if (pos_ < src_.size() && static_cast<unsigned char>(src_[pos_]) >= 0x80)
      fail(line_, col_, "non-ASCII identifiers are not supported");
    Tok kind = kPythonKeywords.count(word) ? Tok::Keyword : Tok::Name;
    push(kind, std::move(word), l, c0, line_, col_);
  }

  void lex_number() {
    int l = line_, c0 = col_;
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
      advance();
    if (pos_ < src_.size() && (is_ident_start(src_[pos_]) || src_[pos_] == '.'))
      fail(line_, col_, "only decimal integer literals are supported");
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 1 && digits[0] == '0' &&
        digits.find_first_not_of('0') != std::string::npos)
      fail(l, c0, "leading zeros in decimal integer literals are not permitted");
    push(Tok::Int, std::move(digits), l, c0, line_, col_);
  }

  void lex_operator() {
    int l = line_, c0 = col_;
    static const char *kTwoChar[] = {"==", "!=", "<=", ">=", "**", "//",
                                     "->", "+=", "-=", "*=", "<<", ">>"};
    for (const char *op : kTwoChar) {
      if (src_.substr(pos_, 2) == op) {
        advance();
        advance();
        push(Tok::Op, op, l, c0, line_, col_);
        return;
      }
    }
    char c = src_[pos_];
    static const std::string kOneChar = "+-*/%=()[]{}:,.<>!&|^~@;";
    if (kOneChar.find(c) == std::string::npos) {
      if (static_cast<unsigned char>(c) >= 0x80)
        fail(l, c0, "non-ASCII character in source");
      fail(l, c0, std::string("unexpected character '") + c + "'");
    }
    if (c == '(' || c == '[' || c == '{')
      ++depth_;
    if (c == ')' || c == ']' || c == '}') {
      if (depth_ == 0)
        fail(l, c0, std::string("unmatched '") + c + "'");
      --depth_;
    }
    advance();
    push(Tok::Op, std::string(1, c), l, c0, line_, col_);
  }

  void push(Tok kind, std::string text, int l, int c, int el, int ec) {
    tokens_.push_back(Token{kind, std::move(text), l, c, el, ec});
  }

  std::string_view src_;
  const std::string &file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  std::vector<int> indents_;
  std::vector<Token> tokens_;
};

class Parser {
public:
  Parser(std::vector<Token> toks, std::string file, int file_id)
      : toks_(std::move(toks)), file_(std::move(file)), file_id_(file_id) {}

  Program program() {
    Program p;
    while (peek().kind == Tok::Newline)
      ++pos_;
    if (peek().kind == Tok::End)
      fail(peek(), "a program needs at least one statement");
    while (peek().kind != Tok::End)
      p.body.push_back(statement(/*in_def=*/false));
    return p;
  }

  Expr lone_expression() {
    Expr e = expression();
    while (peek().kind == Tok::Newline)
      ++pos_;
    if (peek().kind != Tok::End)
      fail(peek(), "unexpected " + describe(peek()) + " after expression");
    return e;
  }

private:
  const Token &peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token &take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool at_op(std::string_view op) const {
    return peek().kind == Tok::Op && peek().text == op;
  }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Keyword && peek().text == kw;
  }

  static std::string describe(const Token &t) {
    switch (t.kind) {
    case Tok::Name: return "name '" + t.text + "'";
    case Tok::Int: return "integer '" + t.text + "'";
    case Tok::Keyword: return "keyword '" + t.text + "'";
    case Tok::Op: return "'" + t.text + "'";
    case Tok::Newline: return "end of line";
    case Tok::Indent: return "indent";
    case Tok::Dedent: return "dedent";
    case Tok::End: return "end of input";
    }
    return "token";
  }

  [[noreturn]] void fail(const Token &t, const std::string &msg) const {
    throw SyntaxError(file_, t.line, t.col, msg);
  }

  const Token &expect_op(std::string_view op) {
    if (!at_op(op))
      fail(peek(), "expected '" + std::string(op) + "', found " + describe(peek()));
    return take();
  }

  void expect_newline() {
    if (peek().kind != Tok::Newline)
      fail(peek(), "expected end of line, found " + describe(peek()));
    ++pos_;
  }

  SourceSpan span_from(const Token &begin) const {
    const Token &end = toks_[pos_ == 0 ? 0 : pos_ - 1];
    return SourceSpan{file_id_, begin.line, begin.col, end.end_line, end.end_col};
  }

  Stmt statement(bool in_def) {
    const Token &start = peek();
    Stmt s;
    if (start.kind == Tok::Indent)
      fail(start, "unexpected indent");
    if (start.kind == Tok::Keyword) {
      if (start.text == "def") {
        if (in_def)
          fail(start, "nested function definitions are not supported");
        s = function_def();
        s.span = span_from(start);
        return s;
      }
      if (start.text == "return") {
        if (!in_def)
          fail(start, "'return' outside function");
        ++pos_;
        s = Stmt::make_return(expression());
        s.span = span_from(start);
        expect_newline();
        return s;
      }
      if (start.text != "not" && start.text != "True" && start.text != "False")
        fail(start, "unsupported statement '" + start.text + "'");
    }
    if (start.kind == Tok::Name && start.text == "print" &&
        peek(1).kind == Tok::Op && peek(1).text == "(") {
      pos_ += 2;
      if (at_op(")"))
        fail(peek(), "print takes exactly one argument");
      Expr arg = expression();
      if (at_op(","))
        fail(peek(), "print takes exactly one argument");
      expect_op(")");
      s = Stmt::make_print(std::move(arg));
      s.span = span_from(start);
      expect_newline();
      return s;
    }
    Expr lhs = expression();
    if (at_op("=")) {
      const Token &eq = take();
      if (lhs.kind != ExprKind::Name && lhs.kind != ExprKind::Subscript)
        fail(eq, "cannot assign to " + std::string(to_string(lhs.kind)));
      Expr rhs = expression();
      if (at_op("="))
        fail(peek(), "chained assignment is not supported");
      s = Stmt::make_assign(std::move(lhs), std::move(rhs));
    } else {
      s = Stmt::make_expr(std::move(lhs));
    }
    s.span = span_from(start);
    expect_newline();
    return s;
  }

  Stmt function_def() {
    ++pos_;  // def
    const Token &name = take();
    if (name.kind != Tok::Name)
      fail(name, "expected function name, found " + describe(name));
    check_plain_identifier(name);
    expect_op("(");
    std::vector<std::string> params;
    if (!at_op(")")) {
      while (true) {
        const Token &p = take();
        if (p.kind != Tok::Name)
          fail(p, "expected parameter name, found " + describe(p));
        check_plain_identifier(p);
        for (const std::string &q : params)
          if (q == p.text)
            fail(p, "duplicate argument '" + p.text + "' in function definition");
        params.push_back(p.text);
        if (!at_op(","))
          break;
        ++pos_;
      }
    }
    expect_op(")");
    expect_op(":");
    if (peek().kind != Tok::Newline)
      fail(peek(), "function body must start on a new line");
    ++pos_;
    if (peek().kind != Tok::Indent)
      fail(peek(), "expected an indented block");
    ++pos_;
    std::vector<Stmt> body;
    while (peek().kind != Tok::Dedent && peek().kind != Tok::End)
      body.push_back(statement(/*in_def=*/true));
    if (peek().kind == Tok::Dedent)
      ++pos_;
    return Stmt::make_def(name.text, std::move(params), std::move(body));
  }

  void check_plain_identifier(const Token &t) const {
    if (t.text == "print" || t.text == "eval" || t.text == "input")
      fail(t, "'" + t.text + "' cannot be used as an identifier");
  }

  // expression ::= disjunction ['if' disjunction 'else' expression]
  Expr expression() {
    const Token &start = peek();
    if (at_keyword("lambda"))
      fail(start, "lambdas are not supported");
    Expr then_e = disjunction();
    if (!at_keyword("if"))
      return then_e;
    ++pos_;
    Expr cond = disjunction();
    if (!at_keyword("else"))
      fail(peek(), "expected 'else' in conditional expression, found " +
                       describe(peek()));
    ++pos_;
    Expr else_e = expression();
    Expr e = Expr::make_ternary(std::move(then_e), std::move(cond), std::move(else_e));
    e.span = span_from(start);
    return e;
  }

  Expr disjunction() {
    const Token &start = peek();
    Expr e = conjunction();
    while (at_keyword("or")) {
      ++pos_;
      e = Expr::make_binary(ExprKind::Or, std::move(e), conjunction());
      e.span = span_from(start);
    }
    return e;
  }

  Expr conjunction() {
    const Token &start = peek();
    Expr e = inversion();
    while (at_keyword("and")) {
      ++pos_;
      e = Expr::make_binary(ExprKind::And, std::move(e), inversion());
      e.span = span_from(start);
    }
    return e;
  }

  Expr inversion() {
    const Token &start = peek();
    if (at_keyword("not")) {
      ++pos_;
      Expr e = Expr::make_unary(ExprKind::Not, inversion());
      e.span = span_from(start);
      return e;
    }
    return comparison();
  }

  bool at_comparator() const {
    if (peek().kind == Tok::Op)
      return peek().text == "==" || peek().text == "!=" || peek().text == "<" ||
             peek().text == ">" || peek().text == "<=" || peek().text == ">=";
    return at_keyword("is") || at_keyword("in") ||
           (at_keyword("not") && peek(1).kind == Tok::Keyword && peek(1).text == "in");
  }

  Expr comparison() {
    const Token &start = peek();
    Expr lhs = sum();
    if (!at_comparator())
      return lhs;
    const Token &op = take();
    ExprKind kind;
    if (op.text == "==")
      kind = ExprKind::Eq;
    else if (op.text == "!=")
      kind = ExprKind::NotEq;
    else if (op.text == "is") {
      if (at_keyword("not"))
        fail(peek(), "'is not' is not supported");
      kind = ExprKind::Is;
    } else
      fail(op, "unsupported comparison operator '" + op.text + "'");
    Expr rhs = sum();
    if (at_comparator())
      fail(peek(), "chained comparisons are not supported");
    Expr e = Expr::make_binary(kind, std::move(lhs), std::move(rhs));
    e.span = span_from(start);
    return e;
  }

  Expr sum() {
    const Token &start = peek();
    Expr e = factor();
    while (true) {
      if (at_op("+")) {
        ++pos_;
        e = Expr::make_binary(ExprKind::Add, std::move(e), factor());
        e.span = span_from(start);
        continue;
      }
      if (peek().kind == Tok::Op &&
          (peek().text == "-" || peek().text == "*" || peek().text == "/" ||
           peek().text == "%" || peek().text == "//" || peek().text == "**"))
        fail(peek(), "unsupported binary operator '" + peek().text + "'");
      return e;
    }
  }

  Expr factor() {
    const Token &start = peek();
    if (at_op("-")) {
      ++pos_;
      Expr e = Expr::make_unary(ExprKind::Neg, factor());
      e.span = span_from(start);
      return e;
    }
    return primary();
  }

  Expr primary() {
    const Token &start = peek();
    Expr e = atom();
    while (true) {
      if (at_op("[")) {
        ++pos_;
        Expr index = expression();
        expect_op("]");
        e = Expr::make_subscript(std::move(e), std::move(index));
        e.span = span_from(start);
      } else if (at_op("(")) {
        ++pos_;
        std::vector<Expr> args = expression_list(")");
        expect_op(")");
        e = Expr::make_call(std::move(e), std::move(args));
        e.span = span_from(start);
      } else {
        return e;
      }
    }
  }

  std::vector<Expr> expression_list(std::string_view close) {
    std::vector<Expr> items;
    if (at_op(close))
      return items;
    while (true) {
      items.push_back(expression());
      if (!at_op(","))
        break;
      ++pos_;
      if (at_op(close))
        fail(peek(), "trailing comma is not supported");
    }
    return items;
  }

  Expr atom() {
    const Token &t = peek();
    Expr e;
    switch (t.kind) {
    case Tok::Name:
      if (t.text == "print") {
        ++pos_;
        expect_op("(");
        if (at_op(")"))
          fail(peek(), "print takes exactly one argument");
        Expr arg = expression();
        if (at_op(","))
          fail(peek(), "print takes exactly one argument");
        expect_op(")");
        e = Expr::make_call(Expr::make_name("print"), {});
        e.operands[0].span = SourceSpan{file_id_, t.line, t.col, t.end_line, t.end_col};
        e.operands.push_back(std::move(arg));
        break;
      }
      if (t.text == "eval") {
        ++pos_;
        expect_op("(");
        const Token &in = take();
        if (in.kind != Tok::Name || in.text != "input")
          fail(in, "eval is only supported in the form eval(input())");
        expect_op("(");
        expect_op(")");
        expect_op(")");
        e = Expr::make_eval_input();
        break;
      }
      if (t.text == "input")
        fail(t, "input is only supported in the form eval(input())");
      ++pos_;
      e = Expr::make_name(t.text);
      break;
    case Tok::Int: {
      ++pos_;
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        fail(t, "integer literal too large");
      e = Expr::make_int(v);
      break;
    }
    case Tok::Keyword:
      if (t.text == "True" || t.text == "False") {
        ++pos_;
        e = Expr::make_bool(t.text == "True");
        break;
      }
      if (t.text == "lambda")
        fail(t, "lambdas are not supported");
      fail(t, "expected expression, found keyword '" + t.text + "'");
    case Tok::Op:
      if (t.text == "(") {
        ++pos_;
        if (at_op(")"))
          fail(peek(), "tuples are not supported");
        e = expression();
        if (at_op(","))
          fail(peek(), "tuples are not supported");
        expect_op(")");
        // Parentheses are not an AST node; keep the inner span.
        return e;
      }
      if (t.text == "[") {
        ++pos_;
        std::vector<Expr> items = expression_list("]");
        expect_op("]");
        e = Expr::make_list(std::move(items));
        break;
      }
      if (t.text == "{") {
        ++pos_;
        std::vector<std::pair<Expr, Expr>> pairs;
        if (!at_op("}")) {
          while (true) {
            Expr k = expression();
            expect_op(":");
            Expr v = expression();
            pairs.emplace_back(std::move(k), std::move(v));
            if (!at_op(","))
              break;
            ++pos_;
            if (at_op("}"))
              fail(peek(), "trailing comma is not supported");
          }
        }
        expect_op("}");
        e = Expr::make_dict(std::move(pairs));
        break;
      }
      fail(t, "expected expression, found " + describe(t));
    default:
      fail(t, "expected expression, found " + describe(t));
    }
    e.span = span_from(t);
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string file_;
  int file_id_;
};

}  // namespace

Program parse_program(std::string_view source, std::string file_name,
                      int file_id) {
  Lexer lexer(source, file_name);
  Parser parser(lexer.run(), file_name, file_id);
  return parser.program();
}

Expr parse_expression(std::string_view source, std::string file_name) {
  Lexer lexer(source, file_name);
  Parser parser(lexer.run(), file_name, 0);
  return parser.lone_expression();
}

}  // namespace leroy
