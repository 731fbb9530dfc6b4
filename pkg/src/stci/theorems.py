"""Theorem evaluators and the quartic configuration case analysis.

Everything here is exact integer/rational arithmetic over the invariants
from stci.rdp.  The three inequality families share the data
(s, t, d, g): surface degrees, curve degree, genus, with multiplicity
n = s*t/d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .rdp import (
    Config,
    RdpPair,
    TypeSeq,
    classified_pairs,
    config_invariants,
    config_miyaoka,
    make_config,
    normalize_type,
    scalar_invariants,
    type_of,
    weighted_type_sum,
)

__all__ = [
    "StciParams",
    "Thm1Result",
    "Thm3Result",
    "ThmAVerdict",
    "thm1_value",
    "thm2_rhs",
    "thm2_margins",
    "thm2_coefficient_identity",
    "thm3_check",
    "resolution_bound",
    "kformula_bound",
    "miyaoka_budget",
    "bungobungo_solve",
    "config_search",
    "murky_applies",
    "thmA_verdict",
]


@dataclass(frozen=True)
class StciParams:
    """Degrees (s, t) of the two surfaces, curve degree d, genus g."""

    s: int
    t: int
    d: int
    g: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise DomainError("surface degrees must be >= 1")
        if self.d < 1:
            raise DomainError("curve degree must be >= 1")
        if self.g < 0:
            raise DomainError("genus must be >= 0")
        if (self.s * self.t) % self.d != 0:
            raise DomainError(
                f"curve degree {self.d} must divide s*t = {self.s * self.t}"
            )

    @property
    def n(self) -> int:
        return self.s * self.t // self.d


@dataclass(frozen=True)
class Thm1Result:
    value: Fraction
    integral: bool


def thm1_value(params: StciParams) -> Thm1Result:
    """Common value {d[n(s-4)+t] + (2-2g)n} / (n-1) of p_1..p_{n-1}.

    Only meaningful for n >= 2; n = 1 is the complete-intersection case.
    """
    s, t, d, g, n = params.s, params.t, params.d, params.g, params.n
    if n < 2:
        raise DomainError("multiplicity n = 1: nothing to evaluate")
    q = d * (n * (s - 4) + t) + (2 - 2 * g) * n
    value = Fraction(q, n - 1)
    return Thm1Result(value, value.denominator == 1)


def _padded(p: Sequence[int], width: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) >= width:
        return p[:width]
    return p + (0,) * (width - len(p))


def thm2_rhs(params: StciParams, k: int) -> int:
    s, t, d, g, n = params.s, params.t, params.d, params.g, params.n
    return (1 << (k - 1)) * (d * t + n * (d * (s - 4) + 2 - 2 * g))


def thm2_margins(params: StciParams, p: Sequence[int]) -> tuple[int, ...]:
    """Slack of the k-th inequality for k = 1..n-1, in order.

    margin(k) = sum_{i<k} 2^(k-i-1) (n-i+1) p_i + (n-k) p_k - rhs(k);
    p is zero-padded beyond the supplied prefix.
    """
    n = params.n
    if n < 2:
        raise DomainError("multiplicity n = 1: no inequalities")
    p = _padded(p, n - 1)
    margins = []
    for k in range(1, n):
        lhs = (n - k) * p[k - 1]
        for i in range(1, k):
            lhs += (1 << (k - i - 1)) * (n - i + 1) * p[i - 1]
        margins.append(lhs - thm2_rhs(params, k))
    return tuple(margins)


def thm2_coefficient_identity(n: int, k: int) -> bool:
    """sum_{i<k} 2^(k-i-1) (n-i+1) == (n-1) 2^(k-1) + k - n, checked both ways."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    lhs = sum((1 << (k - i - 1)) * (n - i + 1) for i in range(1, k))
    rhs = (n - 1) * (1 << (k - 1)) + k - n
    return lhs == rhs


@dataclass(frozen=True)
class Thm3Result:
    lhs: Fraction
    rhs: Fraction
    holds: bool


def thm3_check(
    s: int,
    d: int,
    g: int,
    type_seq: Iterable[int],
    truncate_at: Optional[int] = None,
) -> Thm3Result:
    """Compare the weighted type sum against d^2/s + d(s-4) + 2 - 2g.

    ``truncate_at`` restricts the sum to the first so many entries; the
    full finite type is used by default.
    """
    if s < 1:
        raise DomainError(f"surface degree must be >= 1, got {s}")
    t = normalize_type(type_seq)
    if truncate_at is not None:
        if truncate_at < 0:
            raise DomainError("truncation index must be >= 0")
        t = normalize_type(t[:truncate_at])
    lhs = weighted_type_sum(t)
    rhs = Fraction(d * d, s) + d * (s - 4) + 2 - 2 * g
    return Thm3Result(lhs, rhs, lhs >= rhs)


def resolution_bound(s: int) -> int:
    """Cap (s/3)(2s^2 - 6s + 7) - 1 on exceptional curves in a minimal
    resolution of a degree-s surface with rational singularities."""
    if s < 1:
        raise DomainError(f"surface degree must be >= 1, got {s}")
    num = s * (2 * s * s - 6 * s + 7)
    if num % 3 != 0:
        raise AssertionError(f"s(2s^2-6s+7) not divisible by 3 at s={s}")
    return num // 3 - 1


def kformula_bound(s: int, d: int, g: int, l: int) -> int:
    """Upper bound d(s-1) - kappa on p_1, with kappa = 3d + 2g - 2 - l."""
    kappa = 3 * d + 2 * g - 2 - l
    return d * (s - 1) - kappa


def miyaoka_budget(s: int) -> Fraction:
    """(2/3) s (s-1)^2, the cap on summed singularity contributions."""
    return Fraction(2 * s * (s - 1) * (s - 1), 3)


# ---------------------------------------------------------------------------
# the quartic type bound


def _nonincreasing_seqs(cap: int, budget: int):
    yield ()
    for first in range(min(cap, budget), 0, -1):
        for rest in _nonincreasing_seqs(first, budget - first):
            yield (first,) + rest


def bungobungo_solve() -> list[tuple[int, TypeSeq]]:
    """All (n, p) with n >= 0 and p nonincreasing satisfying

    (i) p_1 <= 9 - (2/5) n, (ii) monotone, (iii) sum p <= 19 - n,
    (iv) n/4 + sum p_k/(k(k+1)) >= 6.

    The search space is finite: (i) forces n <= 22 and (iii) caps the sum.
    """
    out = []
    for n in range(0, 23):
        cap = (45 - 2 * n) // 5
        budget = 19 - n
        if cap < 0 or budget < 0:
            continue
        base = Fraction(n, 4)
        for seq in _nonincreasing_seqs(cap, budget):
            if base + weighted_type_sum(seq) >= 6:
                out.append((n, seq))
    return sorted(out)


# ---------------------------------------------------------------------------
# configuration search


def _fits(piece: TypeSeq, remaining: Sequence[int]) -> bool:
    if len(piece) > len(remaining):
        return False
    return all(piece[i] <= remaining[i] for i in range(len(piece)))


def config_search(
    target: Iterable[int],
    max_deficiency: Optional[int] = None,
    require_delta: Optional[Fraction] = None,
    max_sigma: Optional[int] = None,
    miyaoka_budget_cap: Optional[Fraction] = None,
) -> list[Config]:
    """All configurations of classified pairs whose type equals target.

    ``max_sigma`` bounds the total sigma of a configuration (default: the
    quartic resolution bound, 19) and thereby makes the search finite; the
    remaining filters act on the assembled configuration.  When
    ``miyaoka_budget_cap`` is given, a configuration passes only if all
    its members have A-series contributions summing to at most the cap.
    Results are canonically sorted and deterministic.
    """
    target = normalize_type(target)
    if not target:
        raise DomainError("target type must be nonempty")
    if max_sigma is None:
        max_sigma = resolution_bound(4)

    candidates = []
    for pair in classified_pairs(max_sigma):
        piece = type_of(pair)
        if _fits(piece, target):
            candidates.append((pair, piece, scalar_invariants(pair).sigma))

    results: list[Config] = []
    chosen: list[RdpPair] = []

    def descend(start: int, remaining: list[int], sigma_used: int) -> None:
        if not any(remaining):
            config = make_config(chosen)
            inv = config_invariants(config)
            if max_deficiency is not None and inv.deficiency > max_deficiency:
                return
            if require_delta is not None and inv.delta != require_delta:
                return
            if miyaoka_budget_cap is not None:
                if any(p.species != "A" for p in config):
                    return
                if config_miyaoka(config) > miyaoka_budget_cap:
                    return
            results.append(config)
            return
        for idx in range(start, len(candidates)):
            pair, piece, sigma = candidates[idx]
            if sigma_used + sigma > max_sigma:
                continue
            if not _fits(piece, remaining):
                continue
            for i, v in enumerate(piece):
                remaining[i] -= v
            chosen.append(pair)
            descend(idx, remaining, sigma_used + sigma)
            chosen.pop()
            for i, v in enumerate(piece):
                remaining[i] += v

    descend(0, list(target), 0)
    return sorted(set(results))


# ---------------------------------------------------------------------------
# the d <= g + 3 criterion


def murky_applies(s: int, t: int, d: int, g: int) -> bool:
    """True when the degree bound hypotheses hold for (s, t, d, g)."""
    if not (t >= s >= 4 and d >= 1 and g >= 0):
        return False
    if (s * t) % d != 0:
        return False
    n = s * t // d
    if n < 2:
        return False
    r = d * (n * (s - 4) + t) + (2 - 2 * g) * n
    return r <= resolution_bound(s)


@dataclass(frozen=True)
class ThmAVerdict:
    applies: bool
    conclusion: bool
    witness: str


def thmA_verdict(s: int, t: int, d: int, g: int) -> ThmAVerdict:
    """Check the degree-bound hypotheses and report whether d <= g+3 follows.

    ``conclusion`` is always the literal truth of d <= g+3; when the
    hypotheses apply, the bound is guaranteed and the two must agree.
    """
    if d < 1 or g < 0:
        raise DomainError("need d >= 1 and g >= 0")
    conclusion = d <= g + 3

    if s < 1 or t < 1:
        raise DomainError("surface degrees must be >= 1")
    if not t >= s >= 4:
        return ThmAVerdict(False, conclusion, "out of lemma scope: need t >= s >= 4")
    if (s * t) % d != 0:
        return ThmAVerdict(False, conclusion, f"d = {d} does not divide s*t = {s * t}")
    n = s * t // d
    if n < 2:
        return ThmAVerdict(False, conclusion, "out of lemma scope: complete intersection (n = 1)")
    r = d * (n * (s - 4) + t) + (2 - 2 * g) * n
    bound = resolution_bound(s)
    if r > bound:
        return ThmAVerdict(False, conclusion, f"r = {r} exceeds the resolution bound {bound}")
    if not conclusion:
        raise AssertionError(
            f"hypotheses hold at (s={s}, t={t}, d={d}, g={g}) but d > g + 3"
        )
    return ThmAVerdict(True, True, f"r = {r} <= {bound}; d <= g + 3 is forced")
