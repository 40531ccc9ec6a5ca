"""Statistic-generating polynomials over permutation classes.

Every builder sums one monomial per word of a class, with exponents read off
the word's statistic profile and the weight variable ``al`` raised to the
minima count.  Profile multiplicities per class are cached, so repeated
builds at the same size enumerate only once.

Kinds (``index`` is written n):

* ``bse``:   x^des y^asc al^(lrmin+rlmin-2) over decreasing-prefix words on
  n+1 letters; symmetric in x, y and homogeneous of degree n.
* ``bse-z``: splits the descents of the same words as
  x^(des-lrmin+1) y^asc z^(lrmin-1), same weight.
* ``ptilde``: (u1 u2)^peaks u3^da u4^dd' u5^(lrmin-1) al^weight over the
  same words, where dd' counts double descents past the decreasing prefix.
* ``se``:    x^des y^asc al^(lrmin+rlmin-2) over all of S_n.
* ``refined``: (u1 u2)^peaks u3^da u4^dd al^weight over a chosen class
  (decreasing-prefix words on n+1 letters, or S_n).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import CapExceededError, ValueOutOfRangeError
from .perms import PermClass, StatProfile, enumerate_class, enumeration_cap, stats
from .poly import MultiPoly


class EnumeratorKind(Enum):
    BSE = "bse"
    BSE_Z = "bse-z"
    PTILDE = "ptilde"
    SE = "se"
    REFINED = "refined"


@dataclass(frozen=True)
class Enumerator:
    kind: EnumeratorKind
    index: int
    klass: PermClass | None
    value: MultiPoly

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "index": self.index,
            "class": self.klass.value if self.klass else None,
            "value": self.value.to_json(),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Enumerator":
        return cls(
            kind=EnumeratorKind(payload["kind"]),
            index=int(payload["index"]),
            klass=PermClass(payload["class"]) if payload.get("class") else None,
            value=MultiPoly.from_json(payload["value"]),
        )


@functools.lru_cache(maxsize=None)
def profile_counts(tag: PermClass, n: int) -> tuple:
    """Multiplicity of each statistic profile over a class, as a sorted
    tuple of (StatProfile, count) pairs."""
    counts: dict[StatProfile, int] = {}
    for w in enumerate_class(tag, n, cap=n):
        s = stats(w)
        counts[s] = counts.get(s, 0) + 1
    return tuple(sorted(counts.items()))


def _sum_monomials(counts, exponents) -> MultiPoly:
    """Sum count * monomial(exponents(profile)) over a profile table."""
    terms: dict = {}
    for s, c in counts:
        mono = tuple(sorted((v, e) for v, e in exponents(s).items() if e))
        terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


def _guard(size: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if size > limit:
        raise CapExceededError(f"enumeration over {size} letters exceeds the cap {limit}")


def profile_sum(tag: PermClass, n: int, exponents, cap: int | None = None) -> MultiPoly:
    """Sum one monomial per class member, exponents read off its profile."""
    _guard(n, cap)
    return _sum_monomials(profile_counts(tag, n), exponents)


def build(
    kind: EnumeratorKind,
    index: int,
    klass: PermClass | None = None,
    cap: int | None = None,
) -> Enumerator:
    """Build one enumerator; see the module docstring for the kinds.

    >>> str(build(EnumeratorKind.BSE, 1).value)
    'al*x + al*y'
    >>> str(build(EnumeratorKind.BSE_Z, 1).value)
    'al*y + al*z'
    """
    kind = EnumeratorKind(kind)
    if index < 0:
        raise ValueOutOfRangeError(f"index must be nonnegative, got {index}")
    if kind is EnumeratorKind.REFINED:
        if klass is None:
            klass = PermClass.PRW
        if klass not in (PermClass.PRW, PermClass.SYM):
            raise ValueOutOfRangeError(f"refined enumerator over {klass.value} is not defined")
    elif klass is not None:
        raise ValueOutOfRangeError(f"kind {kind.value} does not take a class")

    if kind in (EnumeratorKind.BSE, EnumeratorKind.BSE_Z, EnumeratorKind.PTILDE):
        size, tag = index + 1, PermClass.PRW
    elif kind is EnumeratorKind.SE:
        size, tag = index, PermClass.SYM
    else:
        size = index + 1 if klass is PermClass.PRW else index
        tag = klass
    if kind is EnumeratorKind.SE and index < 1:
        raise ValueOutOfRangeError("the se enumerator needs index >= 1")
    _guard(size, cap)
    counts = profile_counts(tag, size)

    if kind is EnumeratorKind.BSE:
        value = _sum_monomials(
            counts, lambda s: {"x": s.des, "y": s.asc, "al": s.weight}
        )
    elif kind is EnumeratorKind.BSE_Z:
        value = _sum_monomials(
            counts,
            lambda s: {
                "x": s.des - s.lrmin + 1,
                "y": s.asc,
                "z": s.lrmin - 1,
                "al": s.weight,
            },
        )
    elif kind is EnumeratorKind.PTILDE:
        value = _sum_monomials(
            counts,
            lambda s: {
                "u1": s.peaks,
                "u2": s.peaks,
                "u3": s.double_asc,
                "u4": s.internal_dd,
                "u5": s.lrmin_dd,
                "al": s.weight,
            },
        )
    elif kind is EnumeratorKind.SE:
        value = _sum_monomials(
            counts, lambda s: {"x": s.des, "y": s.asc, "al": s.weight}
        )
    else:
        value = _sum_monomials(
            counts,
            lambda s: {
                "u1": s.peaks,
                "u2": s.peaks,
                "u3": s.double_asc,
                "u4": s.double_desc,
                "al": s.weight,
            },
        )
    return Enumerator(kind=kind, index=index, klass=klass, value=value)


def stirling_eulerian(m: int, k: int, cap: int | None = None) -> MultiPoly:
    """Sum of al^rlmin over the words in S_m with exactly k ascents.

    >>> str(stirling_eulerian(3, 1))
    '3*al^2 + al'
    """
    if m < 0 or k < 0:
        raise ValueOutOfRangeError(f"need m, k >= 0, got m={m}, k={k}")
    _guard(m, cap)
    terms: dict = {}
    for s, c in profile_counts(PermClass.SYM, m):
        if s.asc == k:
            mono = ((("al", s.rlmin),) if s.rlmin else ())
            terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


def alternating_weight(n: int, cap: int | None = None) -> MultiPoly:
    """Sum of al^rlmin over the down-up alternating words in S_n."""
    _guard(n, cap)
    terms: dict = {}
    for s, c in profile_counts(PermClass.ALT_DOWN_UP, n):
        mono = ((("al", s.rlmin),) if s.rlmin else ())
        terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


@functools.lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Count of down-up alternating words, by the doubling convolution
    2*E(n+1) = sum_k comb(n, k) E(k) E(n-k), E(0) = E(1) = 1.

    >>> [euler_number(i) for i in range(9)]
    [1, 1, 1, 2, 5, 16, 61, 272, 1385]
    """
    if n < 0:
        raise ValueOutOfRangeError(f"need n >= 0, got {n}")
    if n <= 1:
        return 1
    m = n - 1
    total = sum(comb(m, k) * euler_number(k) * euler_number(m - k) for k in range(m + 1))
    assert total % 2 == 0
    return total // 2


def half_weight(p: MultiPoly) -> MultiPoly:
    """Substitute al -> al/2."""
    return p.substitute("al", MultiPoly.monomial(Fraction(1, 2), {"al": 1}))
