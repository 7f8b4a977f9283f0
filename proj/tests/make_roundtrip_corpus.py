#!/usr/bin/env python3
"""Generates the bundled round-trip corpus: small, well-typed P2 programs
with input scripts, plus the output CPython prints for each."""

import random
import subprocess
import sys
from pathlib import Path


class Gen:
    def __init__(self, rng):
        self.rng = rng
        self.ints = []
        self.bools = []
        self.lists = []
        self.dicts = []
        self.funcs = []  # (name, arity)
        self.inputs = []
        self.counter = 0

    def fresh(self, prefix):
        self.counter += 1
        return f"{prefix}{self.counter}"

    def int_expr(self, depth):
        r = self.rng.random()
        if depth <= 0 or r < 0.25:
            if self.ints and self.rng.random() < 0.6:
                return self.rng.choice(self.ints)
            return str(self.rng.randint(0, 20))
        choice = self.rng.randrange(9)
        if choice == 0:
            return f"{self.int_expr(depth - 1)} + {self.int_expr(depth - 1)}"
        if choice == 1:
            return f"-{self.atom_int(depth - 1)}"
        if choice == 2:
            return f"({self.int_expr(depth - 1)} if {self.bool_expr(depth - 1)} else {self.int_expr(depth - 1)})"
        if choice == 3 and self.lists:
            name, n = self.rng.choice(self.lists)
            return f"{name}[{self.rng.randrange(n)}]"
        if choice == 4 and self.dicts:
            name, keys = self.rng.choice(self.dicts)
            return f"{name}[{self.rng.choice(keys)}]"
        if choice == 5 and self.funcs:
            fname, arity = self.rng.choice(self.funcs)
            args = ", ".join(self.int_expr(depth - 1) for _ in range(arity))
            return f"{fname}({args})"
        if choice == 6:
            self.inputs.append(str(self.rng.randint(-5, 30)))
            return "eval(input())"
        if choice == 7:
            return f"[{self.int_expr(depth - 1)}, {self.int_expr(depth - 1)}][{self.rng.randrange(2)}]"
        return f"({self.int_expr(depth - 1)} + {self.int_expr(depth - 1)})"

    def atom_int(self, depth):
        if self.ints and self.rng.random() < 0.5:
            return self.rng.choice(self.ints)
        if depth > 0 and self.rng.random() < 0.3:
            return f"({self.int_expr(depth)})"
        return str(self.rng.randint(0, 9))

    def bool_expr(self, depth):
        r = self.rng.random()
        if depth <= 0 or r < 0.2:
            if self.bools and self.rng.random() < 0.5:
                return self.rng.choice(self.bools)
            return self.rng.choice(["True", "False"])
        choice = self.rng.randrange(7)
        if choice == 0:
            return f"{self.int_expr(depth - 1)} == {self.int_expr(depth - 1)}"
        if choice == 1:
            return f"{self.int_expr(depth - 1)} != {self.int_expr(depth - 1)}"
        if choice == 2:
            return f"not {self.bool_expr(depth - 1)}"
        if choice == 3:
            return f"{self.bool_expr(depth - 1)} and {self.bool_expr(depth - 1)}"
        if choice == 4:
            return f"{self.bool_expr(depth - 1)} or {self.bool_expr(depth - 1)}"
        if choice == 5 and self.lists:
            a, _ = self.rng.choice(self.lists)
            b, _ = self.rng.choice(self.lists)
            return f"{a} is {b}"
        if choice == 6:
            self.inputs.append(self.rng.choice(["True", "False"]))
            return "eval(input())"
        return f"({self.bool_expr(depth - 1)})"

    def statement(self):
        kind = self.rng.randrange(9)
        if kind <= 1:
            name = self.fresh("v")
            line = f"{name} = {self.int_expr(2)}"
            self.ints.append(name)
            return [line]
        if kind == 2:
            name = self.fresh("b")
            line = f"{name} = {self.bool_expr(2)}"
            self.bools.append(name)
            return [line]
        if kind == 3:
            name = self.fresh("l")
            n = self.rng.randint(1, 4)
            items = ", ".join(self.int_expr(1) for _ in range(n))
            self.lists.append((name, n))
            return [f"{name} = [{items}]"]
        if kind == 4:
            name = self.fresh("d")
            keys = sorted(self.rng.sample(range(10), self.rng.randint(1, 3)))
            body = ", ".join(f"{k}: {self.int_expr(1)}" for k in keys)
            self.dicts.append((name, keys))
            return [f"{name} = {{{body}}}"]
        if kind == 5 and self.lists:
            name, n = self.rng.choice(self.lists)
            return [f"{name}[{self.rng.randrange(n)}] = {self.int_expr(1)}"]
        if kind == 6 and self.dicts:
            name, keys = self.rng.choice(self.dicts)
            return [f"{name}[{self.rng.choice(keys)}] = {self.int_expr(1)}"]
        if kind == 7 and self.funcs:
            fname, arity = self.rng.choice(self.funcs)
            args = ", ".join(self.int_expr(1) for _ in range(arity))
            return [f"{fname}({args})"]
        return [f"print({self.rng.choice([self.int_expr(2), self.bool_expr(2)])})"]

    def function(self):
        name = self.fresh("f")
        arity = self.rng.randint(1, 3)
        params = [self.fresh("p") for _ in range(arity)]
        saved = (self.ints, self.bools, self.lists, self.dicts)
        self.ints, self.bools, self.lists, self.dicts = list(params), [], [], []
        body = []
        for _ in range(self.rng.randint(0, 3)):
            local = self.fresh("t")
            body.append(f"    {local} = {self.int_expr(2)}")
            self.ints.append(local)
        if self.rng.random() < 0.3:
            body.append(f"    print({self.int_expr(1)})")
        body.append(f"    return {self.int_expr(2)}")
        self.ints, self.bools, self.lists, self.dicts = saved
        self.funcs.append((name, arity))
        return [f"def {name}({', '.join(params)}):"] + body


FIXED = [
    # Every production at least once, plus printing of containers.
    "x = [1, [True, False], {2: 3}]\nprint(x)\nprint(x[1][0] is True)\n",
    "d = {1: [1, 2], 2: {3: 4}}\nd[1][0] = 9\nprint(d)\nprint(d[2][3] + -d[1][1])\n",
    "def k(a, b, c):\n    t = a + b\n    return t if c else -t\nprint(k(1, 2, True))\nprint(k(1, 2, False))\n",
    "a = [1]\nb = a\nc = [1]\nprint(a is b)\nprint(a is c)\nprint(a == c)\nprint(a != c)\n",
    "x = eval(input())\ny = eval(input())\nprint(x + y)\nprint(not x or y)\n",
    "print(1 and 2)\nprint(0 or [])\nprint(not [])\nprint(True + True)\n",
    "def f(n):\n    return n + 1\ng = f\nprint(g(g(1)))\nprint([f(0), f(1)])\n",
    "def show(v):\n    return print(v)\nr = show([1, {2: False}])\nprint(r)\n",
]


def main():
    out_dir = Path(sys.argv[1])
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240601)
    programs = []
    fixed_inputs = {4: ["3", "True"]}
    for i, src in enumerate(FIXED):
        programs.append((src, fixed_inputs.get(i, [])))
    while len(programs) < 60:
        g = Gen(rng)
        lines = []
        for _ in range(rng.randint(0, 2)):
            lines += g.function()
        for _ in range(rng.randint(3, 9)):
            lines += g.statement()
        lines.append(f"print({g.int_expr(2)})")
        src = "\n".join(lines) + "\n"
        programs.append((src, g.inputs))
    kept = 0
    for src, inputs in programs:
        stdin = "".join(v + "\n" for v in inputs)
        res = subprocess.run([sys.executable, "-c", src], input=stdin, capture_output=True, text=True)
        if res.returncode != 0:
            continue
        stem = f"prog{kept:03d}"
        (out_dir / f"{stem}.py").write_text(src)
        (out_dir / f"{stem}.in").write_text(stdin)
        (out_dir / f"{stem}.out").write_text(res.stdout)
        kept += 1
    print(f"wrote {kept} programs")


if __name__ == "__main__":
    main()
