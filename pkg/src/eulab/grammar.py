"""Substitution-rule formal derivatives and the induced letter labeling.

A rule set assigns to some variables a polynomial image; the derivative is
the unique linear operator with D(v) = image(v) for ruled variables,
D(c) = 0 for constants and unruled variables, and the Leibniz product rule
extended to integer (also negative) powers by D(v^k) = k v^(k-1) D(v).

Rule sets parse from a small text form, one ``head -> polynomial ;`` per
rule, with ``#`` comments.  Two rule sets are built in: ``two-variable``
drives the descent/ascent enumerator with a decreasing-prefix marker, and
``five-variable`` drives the peak/double-ascent/double-descent refinement.
The letter labeling below realizes the five-variable rule set
combinatorially, one label per insertion slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateRuleHeadError,
    NotPrefixDecreasingError,
    PolySyntaxError,
    UnknownNameError,
    ValueOutOfRangeError,
)
from .perms import (
    DOUBLE_ASC,
    DOUBLE_DESC,
    PEAK,
    check_word,
    classify,
    is_prefix_decreasing,
    lrmin_values,
    rlmin_values,
)
from .poly import ExprParser, MultiPoly, tokenize


@dataclass(frozen=True)
class Grammar:
    """An ordered set of substitution rules."""

    rules: tuple  # tuple[tuple[str, MultiPoly], ...]

    def rule_map(self) -> dict:
        return dict(self.rules)

    def heads(self) -> tuple:
        return tuple(h for h, _ in self.rules)

    def text(self) -> str:
        return "\n".join(f"{head} -> {body};" for head, body in self.rules)


def parse_grammar(source: str) -> Grammar:
    """Parse a rule-set file.

    >>> g = parse_grammar("a -> a*al*(z+y); x -> x*y; y -> x*y;")
    >>> g.heads()
    ('a', 'x', 'y')
    """
    tokens = tokenize(source)
    parser = ExprParser(tokens)
    rules: list[tuple[str, MultiPoly]] = []
    seen: set[str] = set()
    while parser.peek().kind != "EOF":
        head_tok = parser.take()
        if head_tok.kind != "IDENT":
            raise PolySyntaxError(
                f"expected a rule head, found {ExprParser._show(head_tok)}",
                head_tok.line,
                head_tok.column,
            )
        if head_tok.value in seen:
            raise DuplicateRuleHeadError(f"rule head {head_tok.value!r} appears twice")
        seen.add(head_tok.value)
        parser.expect_op("->")
        body = parser.parse_expr()
        parser.expect_op(";")
        rules.append((head_tok.value, body))
    return Grammar(tuple(rules))


_BUILTIN_SOURCES = {
    # descent/ascent enumerator with the decreasing-prefix marker z
    "two-variable": "a -> a*al*(z+y); x -> x*y; y -> x*y;",
    # peak (u1,u2), double-ascent (u3), double-descent (u4, u5) refinement
    "five-variable": "a -> a*al*(u3+u5); u4 -> u1*u2; u3 -> u1*u2; u1 -> u1*u3; u2 -> u2*u4;",
}


def builtin(name: str) -> Grammar:
    """Return one of the built-in rule sets by name."""
    try:
        return parse_grammar(_BUILTIN_SOURCES[name])
    except KeyError:
        known = ", ".join(sorted(_BUILTIN_SOURCES))
        raise UnknownNameError(f"no built-in rule set {name!r} (known: {known})") from None


def derivative(grammar: Grammar, p: MultiPoly) -> MultiPoly:
    """One application of the rule-set derivative."""
    rules = grammar.rule_map()
    result = MultiPoly.zero()
    for mono, coef in p.terms():
        exps = dict(mono)
        for v, e in mono:
            image = rules.get(v)
            if image is None:
                continue
            rest = dict(exps)
            if e == 1:
                del rest[v]
            else:
                rest[v] = e - 1
            result = result + MultiPoly.monomial(coef * e, rest) * image
    return result


def derive(grammar: Grammar, start: MultiPoly | str, steps: int) -> MultiPoly:
    """Apply the derivative ``steps`` times to ``start``.

    >>> g = builtin("two-variable")
    >>> str(derive(g, "a", 1))
    'a*al*y + a*al*z'
    """
    if steps < 0:
        raise ValueOutOfRangeError(f"steps must be nonnegative, got {steps}")
    p = MultiPoly.var(start) if isinstance(start, str) else start
    for _ in range(steps):
        p = derivative(grammar, p)
    return p


# -- letter labeling --------------------------------------------------------

LABEL_FINAL = "a"


class LabelWord(NamedTuple):
    """Labels of the insertion slots 2..n+1 of a decreasing-prefix word,
    plus the count of marked letters (minima other than the value 1)."""

    labels: tuple  # one of u1..u5 per slot, then "a" on the final slot
    marked: int

    def monomial(self) -> MultiPoly:
        """Product of the labels u1..u5 with the weight variable raised to
        the marked-letter count.  The final slot's ``a`` is excluded so the
        result matches the word's statistic monomial."""
        exps: dict[str, int] = {}
        for lab in self.labels:
            if lab != LABEL_FINAL:
                exps[lab] = exps.get(lab, 0) + 1
        if self.marked:
            exps["al"] = self.marked
        return MultiPoly.monomial(1, exps)


def slot_labels(word: Sequence[int]) -> LabelWord:
    """Label the slots of a word whose prefix ending at 1 is strictly
    decreasing.  Slot ``i`` (2-based) sits immediately before the i-th
    letter; the slot after the last letter is labeled ``a``.

    Each slot gets exactly one label:

    * ``u2`` before a peak, and ``u1`` right after one;
    * ``u3`` before a double ascent;
    * after a double descent, ``u5`` while still inside the decreasing
      prefix (slot at or before the value 1) and ``u4`` past it.

    >>> slot_labels((2, 1)).labels
    ('u5', 'a')
    >>> slot_labels((1,)).labels
    ('a',)
    """
    w = check_word(word)
    if not is_prefix_decreasing(w):
        raise NotPrefixDecreasingError(f"prefix before the value 1 must decrease: {w}")
    n = len(w)
    if n == 0:
        raise ValueOutOfRangeError("labeling needs at least one letter")
    kinds = classify(w)
    k = w.index(1) + 1  # 1-based position of the value 1
    labels: list[str] = []
    for i in range(2, n + 1):  # slot i, between letters i-1 and i (1-based)
        cur = kinds[i - 1]
        prev = kinds[i - 2]
        if cur == PEAK:
            labels.append("u2")
        elif cur == DOUBLE_ASC:
            labels.append("u3")
        elif prev == PEAK:
            labels.append("u1")
        elif prev == DOUBLE_DESC:
            labels.append("u5" if i <= k else "u4")
        else:  # unreachable: the two letters around a slot always decide it
            raise AssertionError(f"unlabeled slot {i} in {w}")
    labels.append(LABEL_FINAL)
    lr = lrmin_values(w)
    rl = rlmin_values(w)
    marked = sum(1 for v in w if (v in lr or v in rl) and v != 1)
    return LabelWord(tuple(labels), marked)
