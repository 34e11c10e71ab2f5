"""Dense exact polynomials over the rationals.

Three concrete types share one implementation:

* :class:`Polynomial` in ``x`` with :class:`~fractions.Fraction` coefficients,
* :class:`NPolynomial` in ``n`` with :class:`~fractions.Fraction` coefficients,
* :class:`BiPolynomial` in ``x`` whose coefficients are :class:`NPolynomial`.

All values are immutable and kept canonical (no trailing zero coefficients),
so ``==`` is mathematical equality. Mixing ``Polynomial`` with ``BiPolynomial``
promotes to ``BiPolynomial``; mixing ``x`` and ``n`` polynomials otherwise is a
``TypeError``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC
from typing import Iterable, List, Sequence, Tuple

from .errors import DivisionByZeroPolynomial, NonExactDivision

__all__ = [
    "BiPolynomial",
    "NPolynomial",
    "Polynomial",
    "format_rational",
    "parse_rational",
]


def format_rational(q, json_style: bool = False) -> str:
    """``"a/b"`` with the sign on ``a``; integers drop ``/1`` unless ``json_style``."""
    q = Fraction(q)
    if q.denominator == 1 and not json_style:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise ValueError(f"not a rational of the form a/b: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def _is_scalar(v) -> bool:
    return isinstance(v, (int, _RationalABC)) and not isinstance(v, bool)


class _Dense:
    variable = "x"
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple = tuple(cs)

    # -- coefficient ring hooks ------------------------------------------
    @staticmethod
    def _coerce_coeff(c):
        if not _is_scalar(c):
            raise TypeError(f"coefficient must be rational, got {type(c).__name__}")
        return Fraction(c)

    @staticmethod
    def _coeff_zero():
        return Fraction(0)

    def _lift(self, other):
        if _is_scalar(other):
            return type(self)([other])
        if type(other) is type(self):
            return other
        return None

    # -- construction ----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def monomial(cls, coeff, degree: int):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return cls([0] * degree + [coeff])

    @classmethod
    def variable_power(cls, degree: int = 1):
        return cls.monomial(1, degree)

    # -- basic protocol --------------------------------------------------
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial (degree minus infinity)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if i < 0:
            raise IndexError("negative exponent")
        return self.coeffs[i] if i < len(self.coeffs) else self._coeff_zero()

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self._coeff_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return type(self)([a[i] + b[i] for i in range(len(b))] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return type(self)()
        out = [self._coeff_zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return type(self)(out)

    __rmul__ = __mul__

    def scale(self, s):
        return type(self)([c * s for c in self.coeffs])

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = type(self).one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coeff_div(self, a, b):
        return a / b

    def divmod(self, den) -> Tuple["_Dense", "_Dense"]:
        d = self._lift(den)
        if d is None:
            raise TypeError(f"cannot divide {type(self).__name__} by {type(den).__name__}")
        if not d.coeffs:
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        lead = d.coeffs[-1]
        if len(rem) <= dd:
            return type(self)(), type(self)(rem)
        quot = [self._coeff_zero()] * (len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd]
            if not c:
                continue
            q = self._coeff_div(c, lead)
            quot[i] = q
            for j, dc in enumerate(d.coeffs):
                if dc:
                    rem[i + j] = rem[i + j] - q * dc
        return type(self)(quot), type(self)(rem[:dd])

    def divide_exact(self, den):
        """Return ``q`` with ``self == q * den``; raise :class:`NonExactDivision` otherwise."""
        q, r = self.divmod(den)
        if r:
            raise NonExactDivision(f"{self} is not divisible by {den}: remainder {r}")
        return q

    def __call__(self, value):
        """Horner evaluation at ``value``."""
        acc = self._coeff_zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    evaluate = __call__

    def shift(self, a) -> "_Dense":
        """The polynomial ``t -> self(t + a)``, expanded binomially."""
        a = Fraction(a)
        out = [self._coeff_zero()] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j in range(i + 1):
                out[j] = out[j] + c * (comb(i, j) * a ** (i - j))
        return type(self)(out)

    # -- serialization ---------------------------------------------------
    def to_text(self) -> str:
        return _format_terms(
            [(i, c) for i, c in enumerate(self.coeffs) if c], self.variable
        )

    def to_json(self) -> List[str]:
        return [format_rational(c, json_style=True) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]):
        return cls([parse_rational(s) for s in data])

    @classmethod
    def parse(cls, text: str):
        return cls(_parse_univariate(text, cls.variable))


def _power_suffix(var: str, i: int) -> str:
    if i == 0:
        return ""
    return var if i == 1 else f"{var}^{i}"


def _format_terms(terms: List[Tuple[int, Fraction]], var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for i, c in reversed(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_rational(mag)
        if i > 0 and mag == 1:
            body = ""
        parts.append((sign, body + _power_suffix(var, i)))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += sign + body
    return text


def _split_top_level(text: str) -> List[str]:
    """Split on ``+``/``-`` outside parentheses, keeping each sign with its term."""
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(text[start:i])
            start = i
    terms.append(text[start:])
    return terms


def _monomial_re(var: str) -> re.Pattern:
    return re.compile(
        rf"([+-]?)(\d+(?:/\d+)?)?({re.escape(var)}(?:\^(\d+))?)?"
    )


def _parse_univariate(text: str, var: str) -> List[Fraction]:
    text = "".join(text.split())
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return []
    pat = _monomial_re(var)
    coeffs: dict = {}
    for term in _split_top_level(text):
        m = pat.fullmatch(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        c = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            c = -c
        e = 0 if m.group(3) is None else int(m.group(4) or 1)
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    top = max(coeffs)
    return [coeffs.get(i, Fraction(0)) for i in range(top + 1)]


class Polynomial(_Dense):
    """Polynomial in ``x`` over the rationals."""

    variable = "x"
    __slots__ = ()


class NPolynomial(_Dense):
    """Polynomial in ``n`` over the rationals."""

    variable = "n"
    __slots__ = ()


class BiPolynomial(_Dense):
    """Polynomial in ``x`` with :class:`NPolynomial` coefficients.

    ``A[i]`` is the polynomial in ``n`` multiplying ``x**i``.
    """

    variable = "x"
    __slots__ = ()

    @staticmethod
    def _coerce_coeff(c):
        if isinstance(c, NPolynomial):
            return c
        if _is_scalar(c):
            return NPolynomial([c])
        raise TypeError(f"BiPolynomial coefficient must be NPolynomial, got {type(c).__name__}")

    @staticmethod
    def _coeff_zero():
        return NPolynomial()

    def _lift(self, other):
        if isinstance(other, BiPolynomial):
            return other
        if _is_scalar(other) or isinstance(other, NPolynomial):
            return BiPolynomial([other])
        if isinstance(other, Polynomial):
            return BiPolynomial(other.coeffs)
        return None

    def _coeff_div(self, a, b):
        if b.degree() != 0:
            raise TypeError("BiPolynomial division needs a divisor with constant n-coefficients")
        return a.scale(1 / b.coeffs[0])

    def scale(self, s):
        return BiPolynomial([c * s for c in self.coeffs])

    def shift(self, a):
        raise NotImplementedError("shift is defined for univariate polynomials only")

    def eval_n(self, n) -> Polynomial:
        """Substitute a value for ``n``; the result is a polynomial in ``x``."""
        return Polynomial([c(Fraction(n)) for c in self.coeffs])

    def eval_x(self, x) -> NPolynomial:
        """Substitute a value for ``x``; the result is a polynomial in ``n``."""
        x = Fraction(x)
        acc = NPolynomial()
        for c in reversed(self.coeffs):
            acc = acc.scale(x) + c
        return acc

    def __call__(self, n, x) -> Fraction:
        return self.eval_n(n)(Fraction(x))

    evaluate = __call__

    def x_degree(self) -> int | None:
        return self.degree()

    def n_degree(self) -> int | None:
        degs = [c.degree() for c in self.coeffs if c]
        return max(degs) if degs else None

    def coefficients(self):
        """Iterate over ``(n_power, x_power, coefficient)`` for nonzero entries."""
        for i, c in enumerate(self.coeffs):
            for j, a in enumerate(c.coeffs):
                if a:
                    yield j, i, a

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            nz = [(j, a) for j, a in enumerate(c.coeffs) if a]
            suffix = _power_suffix("x", i)
            if len(nz) == 1:
                j, a = nz[0]
                sign = "-" if a < 0 else "+"
                mag = abs(a)
                body = "" if (mag == 1 and (i or j)) else format_rational(mag)
                term = sign + body + _power_suffix("n", j) + suffix
            else:
                term = "+(" + c.to_text() + ")" + suffix
            out += term
        return out[1:] if out.startswith("+") else out

    def to_json(self) -> List[List[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([NPolynomial.from_json(row) for row in data])

    @classmethod
    def parse(cls, text: str) -> "BiPolynomial":
        text = "".join(text.split())
        if not text:
            raise ValueError("empty polynomial text")
        if text == "0":
            return cls()
        xpow = re.compile(r"(x(?:\^(\d+))?)?")
        mono = re.compile(r"(\d+(?:/\d+)?)?(n(?:\^(\d+))?)?(x(?:\^(\d+))?)?")
        coeffs: dict = {}
        for term in _split_top_level(text):
            sign = -1 if term.startswith("-") else 1
            body = term[1:] if term[:1] in "+-" else term
            if body.startswith("("):
                close = body.rfind(")")
                if close < 0:
                    raise ValueError(f"unbalanced parentheses in {term!r}")
                inner = NPolynomial.parse(body[1:close])
                m = xpow.fullmatch(body[close + 1:])
                if not m:
                    raise ValueError(f"cannot parse term {term!r}")
                e = 0 if m.group(1) is None else int(m.group(2) or 1)
                piece = inner.scale(sign)
            else:
                m = mono.fullmatch(body)
                if not m or not body:
                    raise ValueError(f"cannot parse term {term!r}")
                c = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
                j = 0 if m.group(2) is None else int(m.group(3) or 1)
                e = 0 if m.group(4) is None else int(m.group(5) or 1)
                piece = NPolynomial.monomial(sign * c, j)
            coeffs[e] = coeffs.get(e, NPolynomial()) + piece
        top = max(coeffs)
        return cls([coeffs.get(i, NPolynomial()) for i in range(top + 1)])
