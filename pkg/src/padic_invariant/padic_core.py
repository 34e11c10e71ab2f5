"""Base-p digits and exact p-adic valuations of integers, rationals and binomials."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Union

__all__ = [
    "INF",
    "PadicNorm",
    "Prime",
    "TraceEntry",
    "Valuation",
    "ValuationTrace",
    "digit_sum",
    "digits_base_p",
    "format_valuation",
    "is_prime",
    "norm",
    "val_binomial_digits",
    "val_binomial_kummer",
    "val_factorial",
    "val_int",
    "val_rational",
]

# Deterministic for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """An ``int`` that is guaranteed prime."""

    def __new__(cls, value) -> "Prime":
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or int(value) != value:
            raise TypeError(f"prime must be an integer, got {value!r}")
        value = int(value)
        if not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"

    def __str__(self) -> str:
        return str(int(self))


@functools.total_ordering
class _Infinity:
    """Valuation of zero. Greater than every integer; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("padic-infinity")

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Valuation = Union[int, _Infinity]


def format_valuation(v: Valuation) -> str:
    return "inf" if v is INF else str(v)


def digits_base_p(n: int, p: int) -> List[int]:
    """Base-``p`` digits of ``n``, least significant first; ``0`` gives ``[]``."""
    p = Prime(p)
    if n < 0:
        raise ValueError("digits_base_p requires n >= 0")
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def digit_sum(n: int, p: int) -> int:
    return sum(digits_base_p(n, p))


def val_factorial(n: int, p: int) -> int:
    """Legendre: ``v_p(n!) = (n - digit_sum(n)) / (p - 1)``."""
    p = Prime(p)
    if n < 0:
        raise ValueError("val_factorial requires n >= 0")
    q, r = divmod(n - digit_sum(n, p), p - 1)
    assert r == 0
    return q


def _check_binomial_args(n: int, m: int) -> None:
    if m < 0 or n < 0:
        raise ValueError("binomial valuation requires n, m >= 0")
    if m > n:
        raise ValueError(f"binomial valuation requires m <= n, got m={m}, n={n}")


def val_binomial_digits(n: int, m: int, p: int) -> int:
    """``v_p(C(n, m))`` from digit sums of ``m``, ``n - m`` and ``n``."""
    p = Prime(p)
    _check_binomial_args(n, m)
    q, r = divmod(digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p), p - 1)
    assert r == 0
    return q


def val_binomial_kummer(n: int, m: int, p: int) -> int:
    """``v_p(C(n, m))`` as the number of carries in ``m + (n - m)`` base ``p``."""
    p = Prime(p)
    _check_binomial_args(n, m)
    a = digits_base_p(m, p)
    b = digits_base_p(n - m, p)
    carries = carry = 0
    for i in range(max(len(a), len(b))):
        s = (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) + carry
        carry = 1 if s >= p else 0
        carries += carry
    return carries


def val_int(n: int, p: int) -> Valuation:
    if n == 0:
        return INF
    p = Prime(p)
    n = abs(n)
    v = 0
    # strip large powers first so huge multiples of p stay cheap
    pk, k = p, 1
    while n % pk == 0:
        n //= pk
        v += k
        pk, k = pk * pk, k * 2
    while n % p == 0:
        n //= p
        v += 1
    return v


def val_rational(x, p: int) -> Valuation:
    x = Fraction(x)
    if x == 0:
        return INF
    return val_int(x.numerator, p) - val_int(x.denominator, p)


class PadicNorm(NamedTuple):
    """``|.|_p`` kept as ``base ** (-valuation)`` alongside its exact value."""

    base: int
    valuation: Valuation
    value: Fraction


def norm(v: Valuation, p: int) -> PadicNorm:
    p = Prime(p)
    if v is INF:
        return PadicNorm(int(p), INF, Fraction(0))
    return PadicNorm(int(p), v, Fraction(p) ** (-v))


class TraceEntry(NamedTuple):
    index: int
    value: Fraction
    valuation: Valuation


@dataclass
class ValuationTrace:
    """Sequence of ``(index, exact value, p-adic valuation)`` rows."""

    p: int
    entries: List[TraceEntry] = field(default_factory=list)
    index_name: str = "N"
    value_name: str = "partial_sum"
    warnings: List[str] = field(default_factory=list)

    def __iter__(self) -> Iterator[TraceEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def valuations(self) -> List[Valuation]:
        return [e.valuation for e in self.entries]

    def append(self, index: int, value: Fraction) -> None:
        self.entries.append(TraceEntry(index, value, val_rational(value, self.p)))
