#!/usr/bin/env python3
"""Generates the scale corpus: 122 short exercise-style programs (about seven
lines each) with input scripts. Families share idioms so there is something
to learn, with varied names and constants."""

import random
from pathlib import Path

SEED = 7122
COUNT = 122

VARS = ["a", "b", "n", "x", "y", "k", "m", "s"]


def pick(rng, k):
    return rng.sample(VARS, k)


def fam_sum(rng):
    a, b, s = pick(rng, 3)
    c = rng.randint(1, 9)
    return [
        f"{a} = eval(input())",
        f"{b} = eval(input())",
        f"{s} = {a} + {b}",
        f"print({s})",
        f"print({s} + {c})",
        f"print({s} == {a} + {b})",
        f"print([{a}, {b}, {s}])",
    ], [str(rng.randint(-9, 40)), str(rng.randint(-9, 40))]


def fam_table(rng):
    t, i = pick(rng, 2)
    vals = [rng.randint(0, 9) for _ in range(3)]
    return [
        f"{t} = {{0: {vals[0]}, 1: {vals[1]}, 2: {vals[2]}}}",
        f"{i} = eval(input())",
        f"{t}[{i}] = {t}[{i}] + 1",
        f"print({t}[0] + {t}[1] + {t}[2])",
        f"print({t})",
        f"print({t}[{i}] if {t}[{i}] != 1 else -1)",
    ], [str(rng.randint(0, 2))]


def fam_swap(rng):
    a, b, t = pick(rng, 3)
    return [
        f"{a} = eval(input())",
        f"{b} = eval(input())",
        f"{t} = {a}",
        f"{a} = {b}",
        f"{b} = {t}",
        f"print({a})",
        f"print({b})",
        f"print({a} == {b})",
    ], [str(rng.randint(0, 20)), str(rng.randint(0, 20))]


def fam_func(rng):
    f = rng.choice(["double", "twice", "dbl"])
    p, x = pick(rng, 2)
    c = rng.randint(0, 5)
    return [
        f"def {f}({p}):",
        f"    return {p} + {p}",
        f"{x} = eval(input())",
        f"print({f}({x}))",
        f"print({f}({f}({x})) + {c})",
        f"print({f}({x}) == {x} + {x})",
    ], [str(rng.randint(-5, 50))]


def fam_flags(rng):
    p, q = pick(rng, 2)
    return [
        f"{p} = eval(input())",
        f"{q} = eval(input())",
        f"print({p} and {q})",
        f"print({p} or {q})",
        f"print(not {p})",
        f"print({p} != {q})",
        f"print(1 if {p} and not {q} else 0)",
    ], [rng.choice(["True", "False"]), rng.choice(["True", "False"])]


def fam_list(rng):
    l, n = pick(rng, 2)
    c = rng.randint(1, 4)
    return [
        f"{n} = eval(input())",
        f"{l} = [{n}, {n} + 1, {n} + {c}]",
        f"{l}[0] = {l}[1] + {l}[2]",
        f"print({l})",
        f"print({l}[0] + {l}[1] + {l}[2])",
        f"print(-{l}[0])",
        f"print({l}[1] == {n} + 1)",
    ], [str(rng.randint(0, 30))]


def fam_grade(rng):
    s, g = pick(rng, 2)
    lim = rng.randint(5, 15)
    return [
        f"{s} = eval(input())",
        f"{g} = {s} == {lim}",
        f"print({g})",
        f"print(1 if {g} else 0)",
        f"print({s} + {lim})",
        f"print([{s}, {g}])",
    ], [str(rng.choice([lim, rng.randint(0, 20)]))]


def fam_acc(rng):
    a, t = pick(rng, 2)
    return [
        f"{t} = 0",
        f"{a} = eval(input())",
        f"{t} = {t} + {a}",
        f"{a} = eval(input())",
        f"{t} = {t} + {a}",
        f"{a} = eval(input())",
        f"{t} = {t} + {a}",
        f"print({t})",
    ], [str(rng.randint(-10, 10)) for _ in range(3)]


FAMILIES = [fam_sum, fam_table, fam_swap, fam_func, fam_flags, fam_list,
            fam_grade, fam_acc]


def main():
    rng = random.Random(SEED)
    out = Path(__file__).resolve().parent / "data" / "scale"
    out.mkdir(parents=True, exist_ok=True)
    for old in out.iterdir():
        old.unlink()
    for i in range(COUNT):
        lines, inputs = FAMILIES[i % len(FAMILIES)](rng)
        stem = out / f"ex{i:03d}"
        stem.with_suffix(".py").write_text("\n".join(lines) + "\n")
        stem.with_suffix(".in").write_text("".join(v + "\n" for v in inputs))


if __name__ == "__main__":
    main()
