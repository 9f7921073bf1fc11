"""Criteria expressions attached to constraint conditions.

Grammar (terms are implicitly conjoined)::

    EXPR    := TERM+
    TERM    := OP OPERAND | 'Min'
    OP      := '<' | '>' | '='
    OPERAND := '(' INT ')' | 'Min' | NUMBER

``<(7)>(8)`` reads "less than condition 7 and greater than condition 8",
``>Min`` "greater than the minimum over all conditions", bare ``Min`` "the
strict minimum over all conditions", and ``>0.95`` compares with a constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union


class CriteriaParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class Ref:
    cond: int

    def __str__(self):
        return f"({self.cond})"


@dataclass(frozen=True)
class MinAll:
    def __str__(self):
        return "Min"


@dataclass(frozen=True)
class Const:
    value: float

    def __str__(self):
        return repr(self.value)


Operand = Union[Ref, MinAll, Const]


@dataclass(frozen=True)
class Compare:
    op: str
    operand: Operand

    def __str__(self):
        return f"{self.op}{self.operand}"


@dataclass(frozen=True)
class IsMin:
    def __str__(self):
        return "Min"


Term = Union[Compare, IsMin]


@dataclass(frozen=True)
class Criteria:
    terms: tuple[Term, ...]

    def __str__(self):
        return "".join(str(t) for t in self.terms)

    def refs(self) -> set[int]:
        return {t.operand.cond for t in self.terms
                if isinstance(t, Compare) and isinstance(t.operand, Ref)}

    def evaluate(self, cond: int, means: Mapping[int, float], eps: float = 0.02) -> bool:
        """Whether condition `cond` satisfies every term, given all means.

        ``=`` holds within `eps`; ``<`` and ``>`` are strict.
        """
        return all(_eval_term(t, cond, means, eps) for t in self.terms)


_NUMBER = re.compile(r"[0-9]+(?:\.[0-9]+)?|\.[0-9]+")
_INT = re.compile(r"[0-9]+")


def parse_criteria(text: str) -> Criteria:
    terms: list[Term] = []
    pos = 0
    src = text.strip()
    if not src:
        raise CriteriaParseError(text, 0, "empty criteria")
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if src.startswith("Min", pos):
            terms.append(IsMin())
            pos += 3
            continue
        if ch not in "<>=":
            raise CriteriaParseError(text, pos, f"expected comparator or 'Min', got {ch!r}")
        op, pos = ch, pos + 1
        if pos >= len(src):
            raise CriteriaParseError(text, pos, "missing operand")
        if src[pos] == "(":
            m = _INT.match(src, pos + 1)
            if m is None:
                raise CriteriaParseError(text, pos + 1, "expected condition number")
            end = m.end()
            if end >= len(src) or src[end] != ")":
                raise CriteriaParseError(text, end, "expected ')'")
            terms.append(Compare(op, Ref(int(m.group()))))
            pos = end + 1
        elif src.startswith("Min", pos):
            terms.append(Compare(op, MinAll()))
            pos += 3
        else:
            m = _NUMBER.match(src, pos)
            if m is None:
                raise CriteriaParseError(text, pos, f"expected operand, got {src[pos]!r}")
            terms.append(Compare(op, Const(float(m.group()))))
            pos = m.end()
    return Criteria(tuple(terms))


def _eval_term(term: Term, cond: int, means: Mapping[int, float], eps: float) -> bool:
    value = means[cond]
    if isinstance(term, IsMin):
        return all(value < v for k, v in means.items() if k != cond)
    operand = term.operand
    if isinstance(operand, Ref):
        other = means[operand.cond]
    elif isinstance(operand, MinAll):
        other = min(means.values())
    else:
        other = operand.value
    if term.op == "<":
        return value < other
    if term.op == ">":
        return value > other
    return abs(value - other) <= eps
