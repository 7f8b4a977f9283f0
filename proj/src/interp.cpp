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

#include "leroy/interp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "leroy/parser.hpp"

namespace leroy {
namespace {

constexpr int kMaxCallDepth = 1000;

const char *kind_name(const Value &v) {
  switch (v.kind) {
  case Value::Kind::Int: return "int";
  case Value::Kind::Bool: return "bool";
  case Value::Kind::List: return "list";
  case Value::Kind::Dict: return "dict";
  case Value::Kind::None: return "NoneType";
  case Value::Kind::Function: return "function";
  case Value::Kind::Builtin: return "builtin_function_or_method";
  }
  return "?";
}

bool is_number(const Value &v) {
  return v.kind == Value::Kind::Int || v.kind == Value::Kind::Bool;
}

bool truthy(const Value &v) {
  switch (v.kind) {
  case Value::Kind::Int:
  case Value::Kind::Bool: return v.num != 0;
  case Value::Kind::List: return !v.list->empty();
  case Value::Kind::Dict: return !v.dict->empty();
  case Value::Kind::None: return false;
  default: return true;
  }
}

void repr_into(const Value &v, std::string &out, std::vector<const void *> &active) {
  switch (v.kind) {
  case Value::Kind::Int:
    out += std::to_string(v.num);
    return;
  case Value::Kind::Bool:
    out += v.num ? "True" : "False";
    return;
  case Value::Kind::None:
    out += "None";
    return;
  case Value::Kind::Function:
    out += "<function " + v.function->name + ">";
    return;
  case Value::Kind::Builtin:
    out += "<built-in function print>";
    return;
  case Value::Kind::List: {
    const void *id = v.list.get();
    if (std::find(active.begin(), active.end(), id) != active.end()) {
      out += "[...]";
      return;
    }
    active.push_back(id);
    out += '[';
    for (std::size_t i = 0; i < v.list->size(); ++i) {
      if (i)
        out += ", ";
      repr_into((*v.list)[i], out, active);
    }
    out += ']';
    active.pop_back();
    return;
  }
  case Value::Kind::Dict: {
    const void *id = v.dict.get();
    if (std::find(active.begin(), active.end(), id) != active.end()) {
      out += "{...}";
      return;
    }
    active.push_back(id);
    out += '{';
    bool first = true;
    for (const auto &[k, val] : *v.dict) {
      if (!first)
        out += ", ";
      first = false;
      repr_into(k, out, active);
      out += ": ";
      repr_into(val, out, active);
    }
    out += '}';
    active.pop_back();
    return;
  }
  }
}

}  // namespace

std::string repr(const Value &v) {
  std::string out;
  std::vector<const void *> active;
  repr_into(v, out, active);
  return out;
}

bool values_equal(const Value &a, const Value &b) {
  if (is_number(a) && is_number(b))
    return a.num == b.num;
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Value::Kind::None:
  case Value::Kind::Builtin:
    return true;
  case Value::Kind::Function:
    return a.function == b.function;
  case Value::Kind::List:
    if (a.list == b.list)
      return true;
    if (a.list->size() != b.list->size())
      return false;
    for (std::size_t i = 0; i < a.list->size(); ++i)
      if (!values_equal((*a.list)[i], (*b.list)[i]))
        return false;
    return true;
  case Value::Kind::Dict:
    if (a.dict == b.dict)
      return true;
    if (a.dict->size() != b.dict->size())
      return false;
    for (const auto &[k, v] : *a.dict) {
      bool found = false;
      for (const auto &[k2, v2] : *b.dict) {
        if (values_equal(k, k2)) {
          found = values_equal(v, v2);
          break;
        }
      }
      if (!found)
        return false;
    }
    return true;
  default:
    return false;
  }
}

namespace {

Value deep_copy(const Value &v) {
  if (v.kind == Value::Kind::List) {
    Value c = v;
    c.list = std::make_shared<std::vector<Value>>();
    for (const Value &e : *v.list)
      c.list->push_back(deep_copy(e));
    return c;
  }
  if (v.kind == Value::Kind::Dict) {
    Value c = v;
    c.dict = std::make_shared<std::vector<std::pair<Value, Value>>>();
    for (const auto &[k, e] : *v.dict)
      c.dict->emplace_back(deep_copy(k), deep_copy(e));
    return c;
  }
  return v;
}

void collect_locals(const std::vector<Stmt> &body, std::set<std::string> &out) {
  for (const Stmt &s : body)
    if (s.kind == StmtKind::Assign && s.target().kind == ExprKind::Name)
      out.insert(s.target().name);
}

class Interpreter {
public:
  explicit Interpreter(const InputScript &inputs) : inputs_(inputs) {}

  void run_module(const Program &p) {
    Frame module;
    exec_block(p.body, module);
  }

  Value eval_constant(const Expr &e) {
    Frame module;
    return eval(e, module);
  }

  std::string &output() { return out_; }

private:
  struct Frame {
    std::unordered_map<std::string, Value> vars;
    const std::set<std::string> *locals = nullptr;  // null at module level
    bool returned = false;
    Value result;
  };

  [[noreturn]] void fail(const std::string &msg) { throw RuntimeError(msg, out_); }

  void exec_block(const std::vector<Stmt> &body, Frame &f) {
    for (const Stmt &s : body) {
      exec(s, f);
      if (f.returned)
        return;
    }
  }

  void exec(const Stmt &s, Frame &f) {
    switch (s.kind) {
    case StmtKind::Print:
      out_ += repr(eval(s.value(), f));
      out_ += '\n';
      return;
    case StmtKind::ExprStmt:
      eval(s.value(), f);
      return;
    case StmtKind::Return:
      f.result = eval(s.value(), f);
      f.returned = true;
      return;
    case StmtKind::Assign: {
      const Expr &t = s.target();
      if (t.kind == ExprKind::Name) {
        Value v = eval(s.value(), f);
        bind(t.name, std::move(v), f);
        return;
      }
      // Python evaluates the right-hand side before the target's parts.
      Value v = eval(s.value(), f);
      Value obj = eval(t.operands[0], f);
      Value key = eval(t.operands[1], f);
      store(obj, key, std::move(v));
      return;
    }
    case StmtKind::FunctionDef: {
      auto &locals = local_sets_[&s];
      locals.clear();
      collect_locals(s.body, locals);
      for (const std::string &p : s.params)
        locals.insert(p);
      Value fn;
      fn.kind = Value::Kind::Function;
      fn.function = &s;
      bind(s.name, fn, f);
      return;
    }
    }
  }

  void bind(const std::string &name, Value v, Frame &f) {
    if (f.locals)
      f.vars[name] = std::move(v);
    else
      globals_[name] = std::move(v);
  }

  Value lookup(const std::string &name, Frame &f) {
    if (f.locals && f.locals->count(name)) {
      auto it = f.vars.find(name);
      if (it == f.vars.end())
        fail("UnboundLocalError: local variable '" + name + "' referenced before assignment");
      return it->second;
    }
    auto it = globals_.find(name);
    if (it != globals_.end())
      return it->second;
    if (name == "print") {
      Value b;
      b.kind = Value::Kind::Builtin;
      return b;
    }
    fail("NameError: name '" + name + "' is not defined");
  }

  std::int64_t list_index(const Value &list, const Value &key) {
    if (!is_number(key))
      fail(std::string("TypeError: list indices must be integers, not ") + kind_name(key));
    auto n = static_cast<std::int64_t>(list.list->size());
    std::int64_t i = key.num < 0 ? key.num + n : key.num;
    if (i < 0 || i >= n)
      fail("IndexError: list index out of range");
    return i;
  }

  void check_hashable(const Value &key) {
    if (key.kind == Value::Kind::List || key.kind == Value::Kind::Dict)
      fail(std::string("TypeError: unhashable type: '") + kind_name(key) + "'");
  }

  void store(const Value &obj, const Value &key, Value v) {
    if (obj.kind == Value::Kind::List) {
      (*obj.list)[static_cast<std::size_t>(list_index(obj, key))] = std::move(v);
      return;
    }
    if (obj.kind == Value::Kind::Dict) {
      check_hashable(key);
      for (auto &[k, val] : *obj.dict) {
        if (values_equal(k, key)) {
          val = std::move(v);
          return;
        }
      }
      obj.dict->emplace_back(key, std::move(v));
      return;
    }
    fail(std::string("TypeError: '") + kind_name(obj) + "' object does not support item assignment");
  }

  Value load(const Value &obj, const Value &key) {
    if (obj.kind == Value::Kind::List)
      return (*obj.list)[static_cast<std::size_t>(list_index(obj, key))];
    if (obj.kind == Value::Kind::Dict) {
      check_hashable(key);
      for (const auto &[k, val] : *obj.dict)
        if (values_equal(k, key))
          return val;
      fail("KeyError: " + repr(key));
    }
    fail(std::string("TypeError: '") + kind_name(obj) + "' object is not subscriptable");
  }

  Value add(const Value &a, const Value &b) {
    if (is_number(a) && is_number(b)) {
      std::int64_t r = 0;
      if (__builtin_add_overflow(a.num, b.num, &r))
        fail("OverflowError: integer result exceeds 64 bits");
      return Value::integer(r);
    }
    if (a.kind == Value::Kind::List && b.kind == Value::Kind::List) {
      Value r;
      r.kind = Value::Kind::List;
      r.list = std::make_shared<std::vector<Value>>(*a.list);
      r.list->insert(r.list->end(), b.list->begin(), b.list->end());
      return r;
    }
    fail(std::string("TypeError: unsupported operand type(s) for +: '") + kind_name(a) +
         "' and '" + kind_name(b) + "'");
  }

  static bool identical(const Value &a, const Value &b) {
    if (a.kind != b.kind)
      return false;
    switch (a.kind) {
    case Value::Kind::Int:
    case Value::Kind::Bool: return a.num == b.num;
    case Value::Kind::List: return a.list == b.list;
    case Value::Kind::Dict: return a.dict == b.dict;
    case Value::Kind::Function: return a.function == b.function;
    default: return true;
    }
  }

  Value call(const Expr &e, Frame &f) {
    Value callee = eval(e.operands[0], f);
    std::vector<Value> args;
    args.reserve(e.operands.size() - 1);
    for (std::size_t i = 1; i < e.operands.size(); ++i)
      args.push_back(eval(e.operands[i], f));
    if (callee.kind == Value::Kind::Builtin) {
      if (args.size() != 1)
        fail("TypeError: print expects exactly one argument here");
      out_ += repr(args[0]);
      out_ += '\n';
      return Value::none();
    }
    if (callee.kind != Value::Kind::Function)
      fail(std::string("TypeError: '") + kind_name(callee) + "' object is not callable");
    const Stmt &def = *callee.function;
    if (args.size() != def.params.size())
      fail("TypeError: " + def.name + "() takes " + std::to_string(def.params.size()) +
           " positional arguments but " + std::to_string(args.size()) + " were given");
    if (depth_ >= kMaxCallDepth)
      fail("RecursionError: maximum recursion depth exceeded");
    Frame frame;
    frame.locals = &local_sets_[&def];
    for (std::size_t i = 0; i < args.size(); ++i)
      frame.vars[def.params[i]] = std::move(args[i]);
    ++depth_;
    exec_block(def.body, frame);
    --depth_;
    return frame.returned ? frame.result : Value::none();
  }

  Value eval(const Expr &e, Frame &f) {
    const auto &ops = e.operands;
    switch (e.kind) {
    case ExprKind::Name:
      return lookup(e.name, f);
    case ExprKind::IntConst:
      return Value::integer(e.value);
    case ExprKind::BoolConst:
      return Value::boolean(e.value != 0);
    case ExprKind::Neg: {
      Value v = eval(ops[0], f);
      if (!is_number(v))
        fail(std::string("TypeError: bad operand type for unary -: '") + kind_name(v) + "'");
      if (v.num == INT64_MIN)
        fail("OverflowError: integer result exceeds 64 bits");
      return Value::integer(-v.num);
    }
    case ExprKind::Not:
      return Value::boolean(!truthy(eval(ops[0], f)));
    case ExprKind::Add: {
      Value a = eval(ops[0], f);
      Value b = eval(ops[1], f);
      return add(a, b);
    }
    case ExprKind::And: {
      Value a = eval(ops[0], f);
      return truthy(a) ? eval(ops[1], f) : a;
    }
    case ExprKind::Or: {
      Value a = eval(ops[0], f);
      return truthy(a) ? a : eval(ops[1], f);
    }
    case ExprKind::Eq:
    case ExprKind::NotEq: {
      Value a = eval(ops[0], f);
      Value b = eval(ops[1], f);
      bool eq = values_equal(a, b);
      return Value::boolean(e.kind == ExprKind::Eq ? eq : !eq);
    }
    case ExprKind::Is: {
      Value a = eval(ops[0], f);
      Value b = eval(ops[1], f);
      return Value::boolean(identical(a, b));
    }
    case ExprKind::Ternary:
      return truthy(eval(ops[1], f)) ? eval(ops[0], f) : eval(ops[2], f);
    case ExprKind::List: {
      Value v;
      v.kind = Value::Kind::List;
      v.list = std::make_shared<std::vector<Value>>();
      for (const Expr &item : ops)
        v.list->push_back(eval(item, f));
      return v;
    }
    case ExprKind::Dict: {
      Value v;
      v.kind = Value::Kind::Dict;
      v.dict = std::make_shared<std::vector<std::pair<Value, Value>>>();
      for (std::size_t i = 0; i + 1 < ops.size(); i += 2) {
        Value k = eval(ops[i], f);
        Value val = eval(ops[i + 1], f);
        store(v, k, std::move(val));
      }
      return v;
    }
    case ExprKind::Subscript: {
      Value obj = eval(ops[0], f);
      Value key = eval(ops[1], f);
      return load(obj, key);
    }
    case ExprKind::Call:
      return call(e, f);
    case ExprKind::EvalInput:
      if (next_input_ >= inputs_.size())
        throw InputExhausted(out_);
      return deep_copy(inputs_[next_input_++]);
    }
    fail("internal: unknown expression");
  }

  const InputScript &inputs_;
  std::size_t next_input_ = 0;
  std::string out_;
  std::unordered_map<std::string, Value> globals_;
  std::map<const Stmt *, std::set<std::string>> local_sets_;
  int depth_ = 0;
};

bool is_literal(const Expr &e) {
  switch (e.kind) {
  case ExprKind::IntConst:
  case ExprKind::BoolConst:
    return true;
  case ExprKind::Neg:
    return e.operands[0].kind == ExprKind::IntConst;
  case ExprKind::List:
  case ExprKind::Dict:
    for (const Expr &o : e.operands)
      if (!is_literal(o))
        return false;
    return true;
  default:
    return false;
  }
}

}  // namespace

InputScript parse_input_script(std::string_view text) {
  InputScript script;
  std::size_t start = 0;
  int line = 0;
  static const InputScript kNoInput;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line;
    std::string_view row = text.substr(start, end - start);
    if (row.find_first_not_of(" \t\r") != std::string_view::npos) {
      Expr e = parse_expression(row, "input:" + std::to_string(line));
      if (!is_literal(e))
        throw SyntaxError("input", line, 1, "input entries must be int, bool, list or dict literals");
      Interpreter interp(kNoInput);
      script.push_back(interp.eval_constant(e));
    }
    start = end + 1;
  }
  return script;
}

std::string run(const Program &p, const InputScript &inputs) {
  Interpreter interp(inputs);
  interp.run_module(p);
  return std::move(interp.output());
}

RunOutcome run_capture(const Program &p, const InputScript &inputs) {
  RunOutcome r;
  try {
    r.output = run(p, inputs);
  } catch (const RuntimeError &e) {
    r.output = e.partial_output();
    r.failed = true;
    r.error = e.what();
  }
  return r;
}

}  // namespace leroy
