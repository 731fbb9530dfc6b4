"""Exact scalars and iterated Euclidean remainder/quotient profiles.

All rational arithmetic in this package is exact: scalars are
``fractions.Fraction`` over arbitrary-precision integers, rendered as
``"p/q"`` (or ``"p"`` when the denominator is 1).  No floating point is
used anywhere in the math core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError

__all__ = [
    "EuclidProfile",
    "euclid_profile",
    "format_rational",
    "parse_rational",
    "rational_arithmetic",
]


def format_rational(value: Fraction | int) -> str:
    """Render an exact scalar as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact scalar."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def rational_arithmetic(a: Fraction, b: Fraction, op: str) -> Fraction | int:
    """Exact add/sub/mul/div; "compare" returns -1, 0, or 1."""
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    if op == "compare":
        return (a > b) - (a < b)
    raise DomainError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class EuclidProfile:
    """Iterated remainders and quotients of N by k.

    ``remainders[0] == k`` by convention, each later entry is the remainder
    of the two before it, and the sequence ends at its first zero.
    ``quotients[i]`` is the integer quotient taken at step i+1, so the two
    tuples satisfy ``len(quotients) == len(remainders) - 1``.

    Two step-count conventions coexist downstream: some formulas index by
    the last nonzero remainder, others by the first zero.  Both are exposed
    so each caller can use its own convention without off-by-one drift.
    """

    N: int
    k: int
    remainders: tuple[int, ...]
    quotients: tuple[int, ...]

    @property
    def t_last_nonzero(self) -> int:
        return len(self.remainders) - 2

    @property
    def t_first_zero(self) -> int:
        return len(self.remainders) - 1

    def rem(self, i: int) -> int:
        """i-th iterated remainder; entries past the first zero are 0."""
        if i < 0:
            raise DomainError("remainder index must be nonnegative")
        if i < len(self.remainders):
            return self.remainders[i]
        return 0

    def div(self, i: int) -> int:
        """i-th iterated quotient (1-based); entries past the end are 0."""
        if i < 1:
            raise DomainError("quotient index must be positive")
        if i <= len(self.quotients):
            return self.quotients[i - 1]
        return 0

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "k": self.k,
            "remainders": list(self.remainders),
            "quotients": list(self.quotients),
        }


def euclid_profile(N: int, k: int) -> EuclidProfile:
    """Full remainder/quotient profile of the Euclidean algorithm on (N, k).

    Requires 1 <= k <= N.
    """
    if k < 1 or k > N:
        raise DomainError(f"euclid_profile requires 1 <= k <= N, got N={N}, k={k}")
    remainders = [k]
    quotients = []
    prev, cur = N, k
    while cur:
        quotients.append(prev // cur)
        prev, cur = cur, prev % cur
        remainders.append(cur)
    return EuclidProfile(N, k, tuple(remainders), tuple(quotients))
