"""Prefix bound expressions evaluated in exact arithmetic.

Syntax (s-expressions)::

    expr := INT | lam | delta | kappa | n
          | (+ expr expr ...) | (- expr expr) | (* expr expr ...)
          | (min expr expr ...) | (/ expr expr) | (sigma expr)
          | (>= expr expr) | (<= expr expr)

``/`` yields a :class:`fractions.Fraction`, never a float.  ``(sigma k)`` is
the minimum degree sum of k independent vertices and may be infinite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

Node = Union[int, str, tuple]
SYMBOLS = frozenset({"lam", "delta", "kappa", "n"})
OPERATORS = {"+": (2, None), "-": (2, 2), "*": (2, None), "min": (2, None), "/": (2, 2),
             "sigma": (1, 1), ">=": (2, 2), "<=": (2, 2)}


class ExprError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse(tokens: list[str], pos: int) -> tuple[Node, int]:
    if pos >= len(tokens):
        raise ExprError("unexpected end of expression")
    tok = tokens[pos]
    if tok == "(":
        if pos + 1 >= len(tokens):
            raise ExprError("unexpected end of expression")
        op = tokens[pos + 1]
        if op not in OPERATORS:
            raise ExprError(f"unknown operator {op!r}")
        args = []
        pos += 2
        while pos < len(tokens) and tokens[pos] != ")":
            arg, pos = _parse(tokens, pos)
            args.append(arg)
        if pos >= len(tokens):
            raise ExprError("missing ')'")
        lo, hi = OPERATORS[op]
        if len(args) < lo or (hi is not None and len(args) > hi):
            raise ExprError(f"wrong number of arguments to {op!r}")
        return (op, *args), pos + 1
    if tok == ")":
        raise ExprError("unexpected ')'")
    if tok.lstrip("-").isdigit():
        return int(tok), pos + 1
    if tok in SYMBOLS:
        return tok, pos + 1
    raise ExprError(f"unknown symbol {tok!r}")


@dataclass(frozen=True)
class Env:
    lam: int
    delta: int
    n: int = 0
    kappa: int = 0
    sigma: Callable[[int], object] = field(default=lambda k: 0, compare=False)


def _eval(node: Node, env: Env):
    if isinstance(node, int):
        return node
    if isinstance(node, str):
        return getattr(env, node)
    op, *args = node
    if op == "sigma":
        k = _eval(args[0], env)
        if not isinstance(k, int) or k < 1:
            raise ExprError(f"sigma index must be a positive integer, got {k}")
        return env.sigma(k)
    vals = [_eval(a, env) for a in args]
    if op == "+":
        return sum(vals[1:], vals[0])
    if op == "-":
        return vals[0] - vals[1]
    if op == "*":
        out = vals[0]
        for v in vals[1:]:
            out = out * v
        return out
    if op == "min":
        return min(vals)
    if op == "/":
        return Fraction(vals[0], vals[1])
    if op == ">=":
        return vals[0] >= vals[1]
    return vals[0] <= vals[1]


@dataclass(frozen=True)
class Expr:
    source: str
    tree: Node = field(compare=False, repr=False)

    @classmethod
    def parse(cls, text: str) -> "Expr":
        tokens = _tokenize(text)
        tree, pos = _parse(tokens, 0)
        if pos != len(tokens):
            raise ExprError(f"trailing tokens in {text!r}")
        return cls(text.strip(), tree)

    def evaluate(self, env: Env):
        return _eval(self.tree, env)

    def __str__(self) -> str:
        return self.source


# Degree hypotheses, named in the statement table.
EQ1 = Expr.parse("(>= delta (+ (/ (+ n 2) (+ lam 1)) (- lam 2)))")
SIGMA_HYP = Expr.parse("(>= (sigma (+ lam 1)) (+ n (* lam (- lam 1))))")
EQ2_BOUNDARY = Expr.parse("(+ (/ (+ n 1) (+ lam 1)) (- lam 2))")


def eq1_holds(n: int, delta: int, lam: int) -> bool:
    """delta >= (n+2)/(lam+1) + lam - 2, cross-multiplied: (lam+1)(delta-lam+2) >= n+2."""
    return (lam + 1) * (delta - lam + 2) >= n + 2


def on_eq2_boundary(n: int, delta: int, lam: int) -> bool:
    """delta == (n+1)/(lam+1) + lam - 2, cross-multiplied."""
    return (lam + 1) * (delta - lam + 2) == n + 1
