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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "leroy/interp.hpp"
#include "leroy/parser.hpp"
#include "leroy/sexpr.hpp"
#include "leroy/unparse.hpp"

namespace leroy {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_text(const std::string &src, const std::string &inputs = "") {
  return run(parse_program(src), parse_input_script(inputs));
}

TEST(Interp, SpecExamples) {
  EXPECT_EQ(run_text("print(1+2)"), "3\n");
  EXPECT_EQ(run_text("x = eval(input())\nprint(x)", "True\n"), "True\n");
}

TEST(Interp, Reprs) {
  EXPECT_EQ(run_text("print([1, True, [], {}])"), "[1, True, [], {}]\n");
  EXPECT_EQ(run_text("print({1: [2], 3: {4: False}})"), "{1: [2], 3: {4: False}}\n");
  EXPECT_EQ(run_text("print(-5)"), "-5\n");
  EXPECT_EQ(run_text("print(print(1))"), "1\nNone\n");
  EXPECT_EQ(run_text("def f():\n    return 1\nprint(f)"), "<function f>\n");
}

TEST(Interp, PythonSemantics) {
  EXPECT_EQ(run_text("print(True + True)"), "2\n");
  EXPECT_EQ(run_text("print(1 == True)"), "True\n");
  EXPECT_EQ(run_text("print(0 or [])"), "[]\n");
  EXPECT_EQ(run_text("print(2 and 3)"), "3\n");
  EXPECT_EQ(run_text("print([1] + [2])"), "[1, 2]\n");
  EXPECT_EQ(run_text("a = [1]\nb = a\nb[0] = 5\nprint(a)"), "[5]\n");
  EXPECT_EQ(run_text("a = [1]\nprint(a is [1])"), "False\n");
  EXPECT_EQ(run_text("x = [1, 2, 3]\nprint(x[-1])"), "3\n");
  EXPECT_EQ(run_text("d = {1: 2, True: 3}\nprint(d)"), "{1: 3}\n");
  EXPECT_EQ(run_text("d = {}\nd[4] = 1\nd[2] = 0\nprint(d)"), "{4: 1, 2: 0}\n");
  EXPECT_EQ(run_text("x = 1\ndef f():\n    return x\nx = 2\nprint(f())"), "2\n");
}

TEST(Interp, ShortCircuitAndLazyTernary) {
  const char *src =
      "def boom():\n    print(9)\n    return True\n"
      "print(False and boom())\nprint(True or boom())\nprint(1 if True else boom())";
  EXPECT_EQ(run_text(src), "False\nTrue\n1\n");
}

TEST(Interp, EvaluationOrder) {
  const char *src =
      "def p(v):\n    print(v)\n    return v\n"
      "x = [0, 0]\nx[p(1)] = p(0)\nprint(p(2) + p(3))";
  EXPECT_EQ(run_text(src), "0\n1\n2\n3\n5\n");
}

TEST(Interp, EvalInputCopiesValues) {
  EXPECT_EQ(run_text("a = eval(input())\nb = eval(input())\nprint(a + b)", "[1]\n[2, 3]\n"),
            "[1, 2, 3]\n");
}

TEST(Interp, InputExhaustedKeepsPartialOutput) {
  try {
    run_text("print(1)\nx = eval(input())");
    FAIL();
  } catch (const InputExhausted &e) {
    EXPECT_EQ(e.partial_output(), "1\n");
  }
}

TEST(Interp, RuntimeErrors) {
  const char *bad[] = {
      "print(y)",
      "print(1 + [])",
      "x = [1]\nprint(x[3])",
      "d = {1: 2}\nprint(d[5])",
      "d = {[1]: 2}",
      "def f(a):\n    return a\nf(1, 2)",
      "x = 1\nx(2)",
      "print(-[1])",
      "x = 1\ndef f():\n    y = x\n    x = 2\n    return y\nf()",
      "def f(n):\n    return f(n)\nf(1)",
      "x = 9223372036854775807\nprint(x + 1)",
  };
  for (const char *src : bad) {
    SCOPED_TRACE(src);
    EXPECT_THROW(run_text(src), RuntimeError);
  }
  RunOutcome o = run_capture(parse_program("print(3)\nprint(q)"), {});
  EXPECT_TRUE(o.failed);
  EXPECT_EQ(o.output, "3\n");
}

TEST(Interp, InputScriptParsing) {
  InputScript s = parse_input_script("1\n\n-2\nTrue\n[1, [False]]\n{1: 2}\n");
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(repr(s[1]), "-2");
  EXPECT_EQ(repr(s[3]), "[1, [False]]");
  EXPECT_THROW(parse_input_script("x\n"), Error);
  EXPECT_THROW(parse_input_script("1 + 2\n"), Error);
}

// Every bundled program: interpreter output equals the CPython output
// recorded next to it, and survives unparse and lispify round trips.
TEST(Interp, RoundTripCorpusAgreesWithCPython) {
  fs::path dir = fs::path(LEROY_TEST_DATA) / "roundtrip";
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.path().extension() == ".py") files.push_back(e.path());
  ASSERT_GE(files.size(), 50u);
  for (const fs::path &f : files) {
    SCOPED_TRACE(f.string());
    Program p = parse_program(slurp(f), f.string());
    fs::path in = f;
    in.replace_extension(".in");
    fs::path out = f;
    out.replace_extension(".out");
    InputScript script = parse_input_script(slurp(in));
    EXPECT_EQ(run(p, script), slurp(out));

    Program again = parse_program(unparse(p));
    EXPECT_EQ(again, p);
    EXPECT_EQ(run(again, script), slurp(out));
    auto back = delispify(lispify(p));
    ASSERT_TRUE(std::holds_alternative<Program>(back));
    EXPECT_EQ(std::get<Program>(back), p);
  }
}

}  // namespace
}  // namespace leroy
