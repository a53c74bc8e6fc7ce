"""Linear transition rules: integer coefficients attached to neighbor offsets.

A rule is a finite sum of coefficient * neighbor-state terms. Coefficients
are deliberately stored over the integers, not reduced mod any n, so the
same rule object can drive automata with different state counts; reduction
happens at application time in the engine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class RuleSyntaxError(ValueError):
    """Malformed rule text; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class RuleTerm:
    """One summand of a linear rule: coefficient times the state at offset."""

    coefficient: int
    offset: tuple[int, ...]


@dataclass(frozen=True)
class TransitionRule:
    """A normalized linear rule: distinct offsets in lexicographic order."""

    dimension: int
    terms: tuple[RuleTerm, ...]


def make_rule(raw_terms: Iterable[tuple[int, tuple[int, ...]]], dimension: int) -> TransitionRule:
    """Normalize raw (coefficient, offset) pairs into a TransitionRule.

    Duplicate offsets are merged by plain integer addition of their
    coefficients, merged terms whose coefficient is 0 are dropped, and the
    survivors are sorted by offset. A rule whose coefficients all cancel is
    rejected as the null rule; a rule that only vanishes mod some particular
    n (say coefficient 2 at n = 2) is legal.
    """
    if dimension < 1:
        raise ValueError(f"dimension must be >= 1, got {dimension}")
    merged: dict[tuple[int, ...], int] = {}
    for coefficient, offset in raw_terms:
        offset = tuple(int(x) for x in offset)
        if len(offset) != dimension:
            raise ValueError(f"offset {offset} has arity {len(offset)}, expected {dimension}")
        merged[offset] = merged.get(offset, 0) + int(coefficient)
    if not merged:
        raise ValueError("empty term list")
    kept = tuple(
        RuleTerm(coefficient, offset)
        for offset, coefficient in sorted(merged.items())
        if coefficient != 0
    )
    if not kept:
        raise ValueError("null rule: all coefficients cancel")
    return TransitionRule(dimension, kept)


_INT = re.compile(r"-?\d+")


def parse_rule(text: str, dimension: int = 1) -> TransitionRule:
    """Parse rule text such as ``"1@(-1);1@(1)"`` into a TransitionRule.

    Grammar: ``rule := term (';' term)*``, ``term := int '@' '(' int (',' int)* ')'``,
    ``int := ['-'] digit+``. Whitespace between tokens is ignored. Every
    offset must have exactly ``dimension`` coordinates.
    """
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            raise RuleSyntaxError(f"expected {ch!r}", pos)
        pos += 1

    def read_int() -> int:
        nonlocal pos
        skip_ws()
        match = _INT.match(text, pos)
        if match is None:
            raise RuleSyntaxError("expected an integer", pos)
        pos = match.end()
        return int(match.group())

    raw: list[tuple[int, tuple[int, ...]]] = []
    while True:
        coefficient = read_int()
        expect("@")
        expect("(")
        coords = [read_int()]
        while True:
            skip_ws()
            if pos < len(text) and text[pos] == ",":
                pos += 1
                coords.append(read_int())
            else:
                break
        expect(")")
        if len(coords) != dimension:
            raise RuleSyntaxError(f"offset has arity {len(coords)}, expected {dimension}", pos)
        raw.append((coefficient, tuple(coords)))
        skip_ws()
        if pos >= len(text):
            break
        if text[pos] != ";":
            raise RuleSyntaxError("expected ';' between terms", pos)
        pos += 1
    return make_rule(raw, dimension)


def format_rule(rule: TransitionRule) -> str:
    """Render a rule in the grammar parse_rule accepts; round-trips exactly."""
    return ";".join(
        f"{term.coefficient}@({','.join(str(x) for x in term.offset)})" for term in rule.terms
    )


def rule_radius(rule: TransitionRule) -> int:
    """Largest infinity-norm offset; bounds the per-step support growth."""
    return max(max(abs(x) for x in term.offset) for term in rule.terms)
