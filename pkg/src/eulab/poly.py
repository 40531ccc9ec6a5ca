"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial is a finite map from monomials to nonzero `fractions.Fraction`
coefficients.  A monomial is a sorted tuple of ``(variable, exponent)`` pairs
with nonzero integer exponents, so the zero polynomial is the empty map and
equal polynomials compare equal structurally.  Negative exponents are allowed
for single-term polynomials only (inverting a sum has no polynomial meaning),
which is all the calculus here ever needs.

The text form uses ``+ - * ^``, integer and rational literals (``3``,
``1/2``), and parentheses.  ``parse_poly(str(p)) == p`` holds for every
polynomial ``p``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import (
    NegativePowerOfNonMonomialError,
    NotHomogeneousError,
    PolySyntaxError,
    UnboundVariableError,
    ZeroAtNegativePowerError,
)

Mono = tuple  # tuple[tuple[str, int], ...], sorted by variable, exponents nonzero
Scalar = Union[int, Fraction]

# Display name overrides used by pretty().  "al" is the ASCII spelling of the
# weight variable; the parser accepts both spellings.
PRETTY_NAMES = {"al": "α"}


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        ne = exps.get(v, 0) + e
        if ne:
            exps[v] = ne
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_pow(m: Mono, k: int) -> Mono:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in m)


class MultiPoly:
    """Immutable sparse polynomial.  Supports ``+ - * **`` with ints,
    Fractions and other polynomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, Scalar] | None = None):
        clean: dict[Mono, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                c = Fraction(coef)
                if c:
                    clean[mono] = c
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(): Fraction(1)})

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, coef: Scalar, exps: Mapping[str, int]) -> "MultiPoly":
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls({mono: Fraction(coef)})

    # -- basic protocol ----------------------------------------------------

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Mono, Fraction]]:
        """Terms in the deterministic display order (graded lexicographic,
        highest total degree first)."""
        return iter(self._ordered_terms())

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coef in p._terms.items():
            nc = terms.get(mono, Fraction(0)) + coef
            if nc:
                terms[mono] = nc
            else:
                terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "_terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "_terms", {m: -c for m, c in self._terms.items()})
        return out

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        terms: dict[Mono, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in p._terms.items():
                mono = _mono_mul(m1, m2)
                nc = terms.get(mono, Fraction(0)) + c1 * c2
                if nc:
                    terms[mono] = nc
                else:
                    terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "_terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return MultiPoly.one()
        if k < 0:
            if not self._terms:
                raise ZeroAtNegativePowerError("zero polynomial at a negative power")
            if len(self._terms) > 1:
                raise NegativePowerOfNonMonomialError(
                    "negative power of a polynomial with more than one term"
                )
            ((mono, coef),) = self._terms.items()
            return MultiPoly({_mono_pow(mono, k): coef**k})
        base, result = self, MultiPoly.one()
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- queries -----------------------------------------------------------

    def coefficient(self, pattern: Mapping[str, int]) -> "MultiPoly":
        """Coefficient of the exact exponent pattern, as a polynomial in the
        remaining variables.

        >>> p = parse_poly("3*x^2*y + x^2 + y")
        >>> str(p.coefficient({"x": 2}))
        '3*y + 1'
        """
        want = {v: e for v, e in pattern.items()}
        terms: dict[Mono, Fraction] = {}
        for mono, coef in self._terms.items():
            exps = dict(mono)
            if all(exps.get(v, 0) == e for v, e in want.items()):
                rest = tuple((v, e) for v, e in mono if v not in want)
                terms[rest] = terms.get(rest, Fraction(0)) + coef
        return MultiPoly(terms)

    def degree_in(self, var: str) -> int:
        """Largest exponent of ``var`` over all terms (0 if absent)."""
        if not self._terms:
            return 0
        return max((dict(mono).get(var, 0) for mono in self._terms), default=0)

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def homogeneous_degree_in(self, variables: Sequence[str]) -> int:
        """Common total degree of every term restricted to ``variables``.

        Raises NotHomogeneousError when the restricted degrees differ.  The
        zero polynomial reports degree 0.
        """
        vs = set(variables)
        degrees = {sum(e for v, e in mono if v in vs) for mono in self._terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            raise NotHomogeneousError(
                f"mixed degrees {sorted(degrees)} in {sorted(vs)}"
            )
        return degrees.pop()

    def is_homogeneous_in(self, variables: Sequence[str]) -> bool:
        try:
            self.homogeneous_degree_in(variables)
            return True
        except NotHomogeneousError:
            return False

    def rename(self, names: Mapping[str, str]) -> "MultiPoly":
        """Simultaneously rename variables, merging exponents if two names
        map to the same target."""
        terms: dict[Mono, Fraction] = {}
        for mono, coef in self._terms.items():
            exps: dict[str, int] = {}
            for v, e in mono:
                nv = names.get(v, v)
                exps[nv] = exps.get(nv, 0) + e
            new = tuple(sorted((v, e) for v, e in exps.items() if e))
            terms[new] = terms.get(new, Fraction(0)) + coef
        return MultiPoly(terms)

    def is_symmetric_in(self, a: str, b: str) -> bool:
        return self == self.rename({a: b, b: a})

    def substitute(self, var: str, value: "MultiPoly | Scalar") -> "MultiPoly":
        """Replace ``var`` by a polynomial.  A negative exponent of ``var``
        requires the replacement to be a nonzero monomial.

        >>> str(parse_poly("x^2 + x*y").substitute("x", parse_poly("y+1")))
        '2*y^2 + 3*y + 1'
        """
        q = self._coerce(value)
        if q is None:
            raise TypeError(f"cannot substitute {type(value).__name__}")
        powers: dict[int, MultiPoly] = {}

        def qpow(e: int) -> MultiPoly:
            if e not in powers:
                if e < 0 and q.is_zero():
                    raise ZeroAtNegativePowerError(
                        f"substituting 0 for {var!r} at exponent {e}"
                    )
                powers[e] = q**e
            return powers[e]

        result = MultiPoly.zero()
        for mono, coef in self._terms.items():
            exps = dict(mono)
            e = exps.pop(var, 0)
            rest = MultiPoly({tuple(sorted(exps.items())): coef})
            result = result + (rest if e == 0 else rest * qpow(e))
        return result

    def eval_at(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point binding every variable."""
        total = Fraction(0)
        for mono, coef in self._terms.items():
            val = coef
            for v, e in mono:
                if v not in point:
                    raise UnboundVariableError(f"no value for variable {v!r}")
                x = Fraction(point[v])
                if x == 0 and e < 0:
                    raise ZeroAtNegativePowerError(
                        f"variable {v!r} is 0 at exponent {e}"
                    )
                val *= x**e
            total += val
        return total

    # -- rendering ---------------------------------------------------------

    def _ordered_terms(self) -> list[tuple[Mono, Fraction]]:
        all_vars = sorted(self.variables())

        def key(item: tuple[Mono, Fraction]):
            exps = dict(item[0])
            vec = tuple(exps.get(v, 0) for v in all_vars)
            return (sum(vec), vec)

        return sorted(self._terms.items(), key=key, reverse=True)

    def text(self, names: Mapping[str, str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or {}
        chunks: list[str] = []
        for i, (mono, coef) in enumerate(self._ordered_terms()):
            mag = abs(coef)
            factors: list[str] = []
            if mag != 1 or not mono:
                factors.append(str(mag))
            for v, e in mono:
                shown = names.get(v, v)
                factors.append(shown if e == 1 else f"{shown}^{e}")
            body = "*".join(factors)
            if i == 0:
                chunks.append(body if coef > 0 else "-" + body)
            else:
                chunks.append(f" + {body}" if coef > 0 else f" - {body}")
        return "".join(chunks)

    def __str__(self) -> str:
        return self.text()

    def pretty(self) -> str:
        """Human display form; the weight variable prints as a Greek letter."""
        return self.text(PRETTY_NAMES)

    def __repr__(self) -> str:
        return f"parse_poly({str(self)!r})"

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> dict:
        """Stable JSON object: terms in display order, coefficients as
        ``"num/den"`` strings."""
        out = []
        for mono, coef in self._ordered_terms():
            out.append(
                {
                    "exp": {v: e for v, e in sorted(mono)},
                    "coef": f"{coef.numerator}/{coef.denominator}",
                }
            )
        return {"terms": out}

    @classmethod
    def from_json(cls, payload: Mapping) -> "MultiPoly":
        terms: dict[Mono, Fraction] = {}
        for item in payload["terms"]:
            mono = tuple(sorted((str(v), int(e)) for v, e in item["exp"].items() if int(e)))
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(item["coef"])
        return cls(terms)


# -- parsing ---------------------------------------------------------------


class Token(NamedTuple):
    kind: str  # NUM IDENT OP EOF
    value: object
    line: int
    column: int


_SYMBOLS = ("->", "+", "-", "*", "^", "(", ")", ";")


def tokenize(text: str) -> list[Token]:
    """Lex a polynomial or rule-set source.  ``#`` starts a comment running
    to end of line.  The Greek spelling of the weight variable is accepted
    as an alias for ``al``."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            den = 1
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[dstart:i])
                if den == 0:
                    raise PolySyntaxError("zero denominator", line, col)
            tokens.append(Token("NUM", Fraction(num, den), line, col))
            col += i - start
            continue
        if ch.isalpha() and (ch.isascii() or ch == "α"):
            start = i
            if ch == "α":
                i += 1
                name = "al"
            else:
                while i < n and (text[i].isascii() and (text[i].isalnum() or text[i] == "_")):
                    i += 1
                name = text[start:i]
            tokens.append(Token("IDENT", name, line, col))
            col += i - start
            continue
        if text.startswith("->", i):
            tokens.append(Token("OP", "->", line, col))
            i += 2
            col += 2
            continue
        if ch in "+-*^();":
            tokens.append(Token("OP", ch, line, col))
            i += 1
            col += 1
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", None, line, col))
    return tokens


class ExprParser:
    """Recursive-descent parser over a token list; used for standalone
    polynomials and for rule bodies inside rule-set files."""

    def __init__(self, tokens: Sequence[Token], pos: int = 0):
        self.tokens = tokens
        self.pos = pos

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind == "OP" and tok.value == op:
            return self.take()
        raise PolySyntaxError(f"expected {op!r}, found {self._show(tok)}", tok.line, tok.column)

    @staticmethod
    def _show(tok: Token) -> str:
        return "end of input" if tok.kind == "EOF" else repr(str(tok.value))

    def parse_expr(self) -> MultiPoly:
        result = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value in ("+", "-"):
                self.take()
                rhs = self.parse_term()
                result = result + rhs if tok.value == "+" else result - rhs
            else:
                return result

    def parse_term(self) -> MultiPoly:
        result = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value == "*":
                self.take()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> MultiPoly:
        tok = self.peek()
        if tok.kind == "OP" and tok.value == "-":
            self.take()
            return -self.parse_factor()
        base = self.parse_primary()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value == "^":
                self.take()
                base = base ** self.parse_exponent()
            else:
                return base

    def parse_exponent(self) -> int:
        tok = self.peek()
        wrapped = tok.kind == "OP" and tok.value == "("
        if wrapped:
            self.take()
            tok = self.peek()
        sign = 1
        if tok.kind == "OP" and tok.value == "-":
            self.take()
            sign = -1
            tok = self.peek()
        if tok.kind != "NUM" or tok.value.denominator != 1:
            raise PolySyntaxError(
                f"expected integer exponent, found {self._show(tok)}", tok.line, tok.column
            )
        self.take()
        if wrapped:
            self.expect_op(")")
        return sign * tok.value.numerator

    def parse_primary(self) -> MultiPoly:
        tok = self.take()
        if tok.kind == "NUM":
            return MultiPoly.const(tok.value)
        if tok.kind == "IDENT":
            return MultiPoly.var(tok.value)
        if tok.kind == "OP" and tok.value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError(f"expected a value, found {self._show(tok)}", tok.line, tok.column)


def parse_poly(text: str) -> MultiPoly:
    """Parse the text form.

    >>> str(parse_poly("(x + y)^2 - 2*x*y"))
    'x^2 + y^2'
    >>> parse_poly("1/2 * t^-1").eval_at({"t": Fraction(1, 4)})
    Fraction(2, 1)
    """
    parser = ExprParser(tokenize(text))
    poly = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise PolySyntaxError(
            f"unexpected trailing input {ExprParser._show(tok)}", tok.line, tok.column
        )
    return poly


def poly_sum(items: Iterable[MultiPoly]) -> MultiPoly:
    """Sum many polynomials without quadratic rebuilding."""
    terms: dict[Mono, Fraction] = {}
    for p in items:
        for mono, coef in p._terms.items():
            nc = terms.get(mono, Fraction(0)) + coef
            if nc:
                terms[mono] = nc
            else:
                terms.pop(mono, None)
    out = MultiPoly.__new__(MultiPoly)
    object.__setattr__(out, "_terms", terms)
    return out
