"""Classified rational double point surface-curve pairs and their invariants.

Every pair is one of five species: A(n,k) with 1 <= k <= (n+1)/2 after
canonicalization, D1(n) for n >= 4 and Dn(n) for n >= 5 (the curve meeting
the first or the last exceptional curve of the resolution), E6, and E7.
The module computes, for single pairs and for multiset configurations:

* the type sequence (p_1, p_2, ...) counting exceptional rulings produced
  by successive blowups along the curve;
* the order (least multiple of the curve that is Cartier);
* delta, the rational self-intersection defect on a minimal resolution;
* sigma, the number of exceptional curves in the minimal resolution, and
  the deficiency sigma - sum(type).

Type sequences are plain tuples of positive integers with trailing zeros
dropped; the empty tuple is the smooth type.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import DomainError, ParseError
from .exact import euclid_profile

TypeSeq = tuple[int, ...]


# ---------------------------------------------------------------------------
# type sequences


def normalize_type(entries: Iterable[int]) -> TypeSeq:
    """Drop trailing zeros and validate that what remains is positive."""
    seq = list(entries)
    while seq and seq[-1] == 0:
        seq.pop()
    for p in seq:
        if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
            raise DomainError(f"type entries must be positive integers, got {p!r}")
    return tuple(seq)


def add_types(a: Iterable[int], b: Iterable[int]) -> TypeSeq:
    """Componentwise sum with zero extension."""
    a, b = tuple(a), tuple(b)
    width = max(len(a), len(b))
    a += (0,) * (width - len(a))
    b += (0,) * (width - len(b))
    return normalize_type(x + y for x, y in zip(a, b))


def format_type(t: Iterable[int]) -> str:
    """Bracket notation: runs of length >= 3 collapse to ``v^[count]``."""
    t = tuple(t)
    parts: list[str] = []
    i = 0
    while i < len(t):
        j = i
        while j < len(t) and t[j] == t[i]:
            j += 1
        run = j - i
        if run >= 3:
            parts.append(f"{t[i]}^[{run}]")
        else:
            parts.extend([str(t[i])] * run)
        i = j
    return "(" + ",".join(parts) + ")"


_RUN_TOKEN = re.compile(r"^(\d+)\^\[(\d+)\]$")


def parse_type(text: str) -> TypeSeq:
    """Parse bracket notation; accepts both "(9,9,1)" and "(2,1^[4])"."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        return ()
    out: list[int] = []
    for token in s.split(","):
        token = token.strip()
        m = _RUN_TOKEN.match(token)
        if m:
            out.extend([int(m.group(1))] * int(m.group(2)))
        elif token.isdigit():
            out.append(int(token))
        else:
            raise ParseError(f"bad type entry {token!r} in {text!r}")
    return normalize_type(out)


def weighted_type_sum(t: Iterable[int]) -> Fraction:
    """Sum of p_k / (k (k+1)) over the sequence, exactly."""
    total = Fraction(0)
    for k, p in enumerate(t, start=1):
        total += Fraction(p, k * (k + 1))
    return total


# ---------------------------------------------------------------------------
# the A-series type recursion and its closed form


def phi(n: int, k: int) -> TypeSeq:
    """Type sequence of the A-series pair with parameters (n, k).

    Evaluates both the recursive definition and the closed form read off
    the Euclidean profile of (n-k+1, k); the two routes must agree.
    """
    if not 1 <= k <= n:
        raise DomainError(f"phi requires 1 <= k <= n, got n={n}, k={k}")
    recursive = _phi_recursive(n, k)
    closed = _phi_closed_form(n, k)
    if recursive != closed:
        raise AssertionError(
            f"phi routes disagree at (n={n}, k={k}): {recursive} != {closed}"
        )
    return recursive


def _phi_recursive(n: int, k: int) -> TypeSeq:
    out: list[int] = []
    while True:
        if 2 * k > n + 1:
            k = n - k + 1
        if 2 * k == n + 1:
            out.append(k)
            return tuple(out)
        out.append(k)
        n -= k


def _phi_closed_form(n: int, k: int) -> TypeSeq:
    if 2 * k > n + 1:
        k = n - k + 1
    profile = euclid_profile(n - k + 1, k)
    out: list[int] = []
    for i in range(profile.t_last_nonzero + 1):
        out.extend([profile.remainders[i]] * profile.quotients[i])
    return tuple(out)


# ---------------------------------------------------------------------------
# classified pairs


@dataclass(frozen=True, order=True)
class RdpPair:
    """A classified pair; construct via pair_a / pair_d_first / pair_d_last.

    n is the Dynkin index (6 and 7 for the exceptional species); k is the
    curve position and is meaningful for species "A" only.
    """

    species: str
    n: int
    k: int = 0

    def __post_init__(self) -> None:
        sp, n, k = self.species, self.n, self.k
        if sp == "A":
            if n < 1 or not 1 <= k <= (n + 1) // 2:
                raise DomainError(f"A({n},{k}) is not canonical: need 1 <= k <= (n+1)/2")
        elif sp == "D1":
            if n < 4 or k != 0:
                raise DomainError(f"D1 requires n >= 4, got n={n}")
        elif sp == "Dn":
            if n < 5 or k != 0:
                raise DomainError(f"Dn requires n >= 5, got n={n}")
        elif sp == "E6":
            if (n, k) != (6, 0):
                raise DomainError("E6 carries no parameters")
        elif sp == "E7":
            if (n, k) != (7, 0):
                raise DomainError("E7 carries no parameters")
        else:
            raise DomainError(f"unknown species {sp!r}")


def pair_a(n: int, k: int) -> RdpPair:
    """A-series pair; k > (n+1)/2 is folded to n-k+1 by the type symmetry."""
    if n < 1 or not 1 <= k <= n:
        raise DomainError(f"A-pair requires 1 <= k <= n, got n={n}, k={k}")
    if 2 * k > n + 1:
        k = n - k + 1
    return RdpPair("A", n, k)


def pair_d_first(n: int) -> RdpPair:
    return RdpPair("D1", n)


def pair_d_last(n: int) -> RdpPair:
    return RdpPair("Dn", n)


E6 = RdpPair("E6", 6)
E7 = RdpPair("E7", 7)


def _descriptor_int(token: str, text: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise ParseError(f"bad pair descriptor {text!r}") from exc


def classify(text: str) -> RdpPair:
    """Parse a pair descriptor: "A:n:k", "D1:n", "Dn:n", "E6", "E7"."""
    parts = text.strip().split(":")
    if parts[0] == "A" and len(parts) == 3:
        return pair_a(_descriptor_int(parts[1], text), _descriptor_int(parts[2], text))
    if parts[0] == "D1" and len(parts) == 2:
        return pair_d_first(_descriptor_int(parts[1], text))
    if parts[0] == "Dn" and len(parts) == 2:
        return pair_d_last(_descriptor_int(parts[1], text))
    if parts[0] in ("E6", "E7") and len(parts) == 1:
        return E6 if parts[0] == "E6" else E7
    raise ParseError(f"bad pair descriptor {text!r}")


def format_pair(p: RdpPair) -> str:
    if p.species == "A":
        return f"A:{p.n}:{p.k}"
    if p.species in ("D1", "Dn"):
        return f"{p.species}:{p.n}"
    return p.species


def type_of(p: RdpPair) -> TypeSeq:
    """Type sequence of a classified pair."""
    if p.species == "A":
        return phi(p.n, p.k)
    if p.species == "D1":
        return (2,)
    if p.species == "Dn":
        if p.n % 2 == 0:
            return (p.n // 2,)
        return ((p.n - 1) // 2,) + (1,) * (p.n - 1)
    if p.species == "E6":
        return (2, 2)
    return (3,)


@dataclass(frozen=True)
class ScalarInvariants:
    order: int
    delta: Fraction
    sigma: int
    deficiency: int


def scalar_invariants(p: RdpPair) -> ScalarInvariants:
    """Order, delta, sigma, and deficiency of a single pair."""
    if p.species == "A":
        order = (p.n + 1) // math.gcd(p.k, p.n + 1)
        delta = Fraction(p.k * (p.n - p.k + 1), p.n + 1)
    elif p.species == "D1":
        order = 2
        delta = Fraction(1)
    elif p.species == "Dn":
        order = 2 if p.n % 2 == 0 else 4
        delta = Fraction(p.n, 4)
    elif p.species == "E6":
        order = 3
        delta = Fraction(4, 3)
    else:
        order = 2
        delta = Fraction(3, 2)
    sigma = p.n
    deficiency = sigma - sum(type_of(p))
    return ScalarInvariants(order, delta, sigma, deficiency)


def blowup_of(p: RdpPair) -> Optional[RdpPair]:
    """Pair arising after one blowup along the curve; None when smooth."""
    if p.species == "A":
        n, k = p.n, p.k
        if 2 * k == n + 1:
            return None
        if 2 * k > n - k + 1:
            return pair_a(n - k, n - 2 * k + 1)
        return pair_a(n - k, k)
    if p.species == "Dn" and p.n % 2 == 1:
        return pair_a(p.n - 1, 1)
    if p.species == "E6":
        return pair_a(3, 2)
    return None


def miyaoka_contribution(p: RdpPair) -> Fraction:
    """Quotient-singularity contribution (n+1) - 1/(n+1), A-series only."""
    if p.species != "A":
        raise DomainError(
            f"miyaoka contribution is unsupported for species {p.species}: "
            "no group order is on record for D/E pairs"
        )
    return (p.n + 1) - Fraction(1, p.n + 1)


def classified_pairs(max_param: int) -> Iterator[RdpPair]:
    """All canonical pairs with Dynkin index at most max_param."""
    for n in range(1, max_param + 1):
        for k in range(1, (n + 1) // 2 + 1):
            yield RdpPair("A", n, k)
    for n in range(4, max_param + 1):
        yield pair_d_first(n)
    for n in range(5, max_param + 1):
        yield pair_d_last(n)
    if max_param >= 6:
        yield E6
    if max_param >= 7:
        yield E7


# ---------------------------------------------------------------------------
# configurations (finite multisets of pairs)

Config = tuple[RdpPair, ...]


def make_config(pairs: Iterable[RdpPair]) -> Config:
    return tuple(sorted(pairs))


def parse_config(text: str) -> Config:
    """Parse a configuration descriptor like "8*A:2:1 + A:3:1"."""
    s = text.strip()
    if not s:
        return ()
    out: list[RdpPair] = []
    for term in s.split("+"):
        term = term.strip()
        if not term:
            raise ParseError(f"empty term in configuration {text!r}")
        if "*" in term:
            mult_text, _, pair_text = term.partition("*")
            try:
                mult = int(mult_text.strip())
            except ValueError as exc:
                raise ParseError(f"bad multiplicity in {term!r}") from exc
            if mult < 1:
                raise ParseError(f"multiplicity must be >= 1 in {term!r}")
            out.extend([classify(pair_text.strip())] * mult)
        else:
            out.append(classify(term))
    return make_config(out)


def format_config(config: Config) -> str:
    if not config:
        return ""
    counts = Counter(config)
    terms = []
    for pair in sorted(counts):
        m = counts[pair]
        terms.append(f"{m}*{format_pair(pair)}" if m > 1 else format_pair(pair))
    return " + ".join(terms)


@dataclass(frozen=True)
class ConfigInvariants:
    type_seq: TypeSeq
    order: int
    delta: Fraction
    sigma: int
    deficiency: int


def config_invariants(config: Iterable[RdpPair]) -> ConfigInvariants:
    """Additive invariants of a configuration; order aggregates by lcm."""
    type_seq: TypeSeq = ()
    order = 1
    delta = Fraction(0)
    sigma = 0
    deficiency = 0
    for p in config:
        inv = scalar_invariants(p)
        type_seq = add_types(type_seq, type_of(p))
        order = math.lcm(order, inv.order)
        delta += inv.delta
        sigma += inv.sigma
        deficiency += inv.deficiency
    return ConfigInvariants(type_seq, order, delta, sigma, deficiency)


def config_miyaoka(config: Iterable[RdpPair]) -> Fraction:
    """Sum of the members' contributions; raises on D/E species."""
    total = Fraction(0)
    for p in config:
        total += miyaoka_contribution(p)
    return total
