"""Permutation words and the descent-type statistics used everywhere else.

A permutation of ``{1..n}`` is a plain tuple of ints.  Letter classification
pads both ends with ``+inf``: with that convention every letter is exactly
one of peak, valley, double ascent, double descent, the value 1 is always a
valley, and the first and last letters are left/right minima respectively.

``stats`` also refines double ascents and double descents by whether the
letter is a right-to-left (resp. left-to-right) minimum; that split is what
the interval-swap/minima-hop action and the rule-based derivative calculus
are keyed on.
"""

from __future__ import annotations

import itertools
import os
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceededError, InvalidPermutationError, ValueOutOfRangeError

Perm = tuple  # tuple[int, ...]

_INF = float("inf")

DEFAULT_CAP = 10
_CAP_ENV = "EULAB_MAX_N"


def enumeration_cap() -> int:
    """Largest word length the class enumerators will touch.  Defaults to
    10 and can be overridden with the EULAB_MAX_N environment variable."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueOutOfRangeError(f"{_CAP_ENV} must be an integer, got {raw!r}") from None


def check_word(word: Sequence[int]) -> Perm:
    """Validate that ``word`` is a permutation of 1..n and return it as a
    tuple."""
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse space- or comma-separated 1-based values.

    >>> parse_perm("2, 1, 3")
    (2, 1, 3)
    """
    parts = text.replace(",", " ").split()
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise InvalidPermutationError(f"not a permutation word: {text!r}") from None
    return check_word(values)


def format_perm(word: Sequence[int]) -> str:
    return " ".join(str(v) for v in word)


class StatProfile(NamedTuple):
    """All statistics of one word under +inf padding.

    ``lrmin``/``rlmin`` count left-to-right and right-to-left minima.
    ``rlmin_da`` counts double ascents that are right-to-left minima and
    ``internal_da`` the rest; ``lrmin_dd``/``internal_dd`` split double
    descents the same way by left-to-right minima.
    """

    n: int
    des: int
    asc: int
    peaks: int
    valleys: int
    double_asc: int
    double_desc: int
    lrmin: int
    rlmin: int
    internal_da: int
    internal_dd: int
    rlmin_da: int
    lrmin_dd: int

    @property
    def weight(self) -> int:
        """Exponent of the weight variable: lrmin + rlmin - 2."""
        return self.lrmin + self.rlmin - 2


def lrmin_values(word: Sequence[int]) -> set:
    out, best = set(), _INF
    for v in word:
        if v < best:
            best = v
            out.add(v)
    return out


def rlmin_values(word: Sequence[int]) -> set:
    out, best = set(), _INF
    for v in reversed(word):
        if v < best:
            best = v
            out.add(v)
    return out


def minima(word: Sequence[int]) -> tuple[tuple, tuple]:
    """1-based positions of left-to-right and right-to-left minima, each in
    increasing position order.

    >>> minima((5, 4, 1, 2, 7, 3, 6, 10, 9, 8))
    ((1, 2, 3), (3, 4, 6, 7, 10))
    """
    w = check_word(word)
    lr, best = [], _INF
    for i, v in enumerate(w, start=1):
        if v < best:
            best = v
            lr.append(i)
    rl, best = [], _INF
    for i in range(len(w), 0, -1):
        if w[i - 1] < best:
            best = w[i - 1]
            rl.append(i)
    rl.reverse()
    return tuple(lr), tuple(rl)


PEAK, VALLEY, DOUBLE_ASC, DOUBLE_DESC = "peak", "valley", "double_asc", "double_desc"


def classify(word: Sequence[int]) -> tuple:
    """Class of every letter under +inf padding, in position order.

    >>> classify((2, 1, 3))
    ('double_desc', 'valley', 'double_asc')
    """
    w = check_word(word)
    n = len(w)
    out = []
    for i, v in enumerate(w):
        left = w[i - 1] if i else _INF
        right = w[i + 1] if i + 1 < n else _INF
        if left < v > right:
            out.append(PEAK)
        elif left > v < right:
            out.append(VALLEY)
        elif left < v < right:
            out.append(DOUBLE_ASC)
        else:
            out.append(DOUBLE_DESC)
    return tuple(out)


def stats(word: Sequence[int]) -> StatProfile:
    """Full statistic profile of a word.

    >>> p = stats((2, 1, 3))
    >>> (p.des, p.asc, p.peaks, p.valleys) == (1, 1, 0, 1)
    True
    >>> (p.lrmin, p.rlmin, p.lrmin_dd, p.rlmin_da) == (2, 2, 1, 1)
    True
    """
    w = check_word(word)
    n = len(w)
    des = asc = 0
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            des += 1
        else:
            asc += 1
    lr = lrmin_values(w)
    rl = rlmin_values(w)
    peaks = valleys = 0
    internal_da = internal_dd = rlmin_da = lrmin_dd = 0
    for i, v in enumerate(w):
        left = w[i - 1] if i else _INF
        right = w[i + 1] if i + 1 < n else _INF
        if left < v > right:
            peaks += 1
        elif left > v < right:
            valleys += 1
        elif left < v < right:
            if v in rl:
                rlmin_da += 1
            else:
                internal_da += 1
        else:
            if v in lr:
                lrmin_dd += 1
            else:
                internal_dd += 1
    return StatProfile(
        n=n,
        des=des,
        asc=asc,
        peaks=peaks,
        valleys=valleys,
        double_asc=internal_da + rlmin_da,
        double_desc=internal_dd + lrmin_dd,
        lrmin=len(lr),
        rlmin=len(rl),
        internal_da=internal_da,
        internal_dd=internal_dd,
        rlmin_da=rlmin_da,
        lrmin_dd=lrmin_dd,
    )


def is_prefix_decreasing(word: Sequence[int]) -> bool:
    """True when every letter before the value 1 exceeds its successor, so
    the prefix ending at 1 is strictly decreasing.  Equivalently the first
    ascent, if any, starts at the value 1; the two readings are checked
    against each other exhaustively in the tests.

    >>> is_prefix_decreasing((5, 4, 1, 2, 7, 3, 6, 10, 9, 8))
    True
    >>> is_prefix_decreasing((2, 3, 1))
    False
    """
    w = tuple(word)
    if not w:
        return True
    k = w.index(1)
    return all(w[i] > w[i + 1] for i in range(k))


class PermClass(Enum):
    """Enumerable families of words."""

    SYM = "sym"
    PRW = "prw"
    NDD_INTERIOR = "ndd-interior"
    ALT_DOWN_UP = "alt-down-up"


def _no_interior_double_descent_run(w: Perm) -> bool:
    # no 1-based index 1 < i < n with w[i-1] > w[i] > w[i+1]
    return not any(w[i - 1] > w[i] > w[i + 1] for i in range(1, len(w) - 1))


def _is_down_up(w: Perm) -> bool:
    return all((w[i] > w[i + 1]) == (i % 2 == 0) for i in range(len(w) - 1))


def enumerate_class(tag: PermClass, n: int, cap: int | None = None) -> Iterator[Perm]:
    """Stream the members of a class on n letters in lexicographic order.

    ``n`` must stay at or below the enumeration cap (see
    ``enumeration_cap``); pass ``cap`` to override per call.
    """
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {limit}")
    low = 0 if tag is PermClass.SYM else 1
    if n < low:
        raise ValueOutOfRangeError(f"n={n} is too small for class {tag.value}")
    base = itertools.permutations(range(1, n + 1))
    if tag is PermClass.SYM:
        return iter(base)
    if tag is PermClass.PRW:
        return (w for w in base if is_prefix_decreasing(w))
    if tag is PermClass.NDD_INTERIOR:
        return (w for w in base if _no_interior_double_descent_run(w))
    return (w for w in base if _is_down_up(w))


def class_size(tag: PermClass, n: int, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_class(tag, n, cap))
