"""Exact intersection arithmetic on an iterated curve blowup of projective
3-space.

A context fixes the curve data (degree d, genus g) and the per-level
integers beta_1..beta_n; the derived alpha sequence starts at
alpha_0 = 2 - 2g - 4d and steps by alpha_k = alpha_{k-1} - beta_k.  Cycle
classes live in the graded basis

    degree 0: 1        degree 1: H, E_1..E_n
    degree 2: H^2, R_1..R_n        degree 3: pt

with integer coefficients.  Multiplication is the bilinear extension of

    H^3 = pt            H.R_k = 0           H^2.E_k = 0
    E_i.R_j = -delta_{ij} pt                H.E_k = d R_k
    E_i.E_j = -beta_i R_j (i < j)
    E_k^2   = -d H^2 - alpha_{k-1} R_k - sum_{i<k} beta_i R_i

and products of total degree above 3 vanish.  The strict transforms of the
exceptional surfaces and rulings are deliberately NOT basis elements here;
they are combinations of the classes above (see stci.graphs for rulings).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContextMismatchError, DomainError

__all__ = [
    "BlowupContext",
    "CycleClass",
    "StExpansion",
    "make_context",
    "beta_from_p",
    "mul",
    "surface_class",
    "canonical_class",
    "st_expansion",
    "a_closed_form",
    "format_class",
    "class_to_json",
]


@dataclass(frozen=True)
class BlowupContext:
    """Immutable ring data: curve degree, genus, and the beta sequence."""

    d: int
    g: int
    beta: tuple[int, ...]
    alpha: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.d < 1:
            raise DomainError(f"curve degree must be >= 1, got {self.d}")
        if self.g < 0:
            raise DomainError(f"genus must be >= 0, got {self.g}")
        alpha = [2 - 2 * self.g - 4 * self.d]
        for b in self.beta:
            alpha.append(alpha[-1] - b)
        object.__setattr__(self, "alpha", tuple(alpha))

    @property
    def n(self) -> int:
        return len(self.beta)

    def zero(self) -> "CycleClass":
        n = self.n
        return CycleClass(self, 0, 0, (0,) * n, 0, (0,) * n, 0)

    def one(self) -> "CycleClass":
        return self.zero()._replace(c0=1)

    def h(self) -> "CycleClass":
        return self.zero()._replace(h=1)

    def e(self, k: int) -> "CycleClass":
        self._check_level(k)
        vec = [0] * self.n
        vec[k - 1] = 1
        return self.zero()._replace(e=tuple(vec))

    def h2(self) -> "CycleClass":
        return self.zero()._replace(h2=1)

    def r(self, k: int) -> "CycleClass":
        self._check_level(k)
        vec = [0] * self.n
        vec[k - 1] = 1
        return self.zero()._replace(r=tuple(vec))

    def point(self) -> "CycleClass":
        return self.zero()._replace(pt=1)

    def _check_level(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise DomainError(f"level {k} outside 1..{self.n}")


def make_context(d: int, g: int, beta: Iterable[int]) -> BlowupContext:
    return BlowupContext(d, g, tuple(beta))


def beta_from_p(s: int, d: int, g: int, p: Iterable[int]) -> tuple[int, ...]:
    """beta_k = d*s + (2 - 4d - 2g) - p_k, componentwise."""
    if s < 1:
        raise DomainError(f"surface degree must be >= 1, got {s}")
    base = d * s + (2 - 4 * d - 2 * g)
    return tuple(base - pk for pk in p)


@dataclass(frozen=True)
class CycleClass:
    """Graded class with integer coefficients; immutable."""

    ctx: BlowupContext
    c0: int
    h: int
    e: tuple[int, ...]
    h2: int
    r: tuple[int, ...]
    pt: int

    def _replace(self, **kw) -> "CycleClass":
        data = {
            "ctx": self.ctx,
            "c0": self.c0,
            "h": self.h,
            "e": self.e,
            "h2": self.h2,
            "r": self.r,
            "pt": self.pt,
        }
        data.update(kw)
        return CycleClass(**data)

    def _require_same_ctx(self, other: "CycleClass") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                "cycle classes belong to different blowup contexts"
            )

    def __add__(self, other: "CycleClass") -> "CycleClass":
        self._require_same_ctx(other)
        return CycleClass(
            self.ctx,
            self.c0 + other.c0,
            self.h + other.h,
            tuple(a + b for a, b in zip(self.e, other.e)),
            self.h2 + other.h2,
            tuple(a + b for a, b in zip(self.r, other.r)),
            self.pt + other.pt,
        )

    def __neg__(self) -> "CycleClass":
        return CycleClass(
            self.ctx,
            -self.c0,
            -self.h,
            tuple(-a for a in self.e),
            -self.h2,
            tuple(-a for a in self.r),
            -self.pt,
        )

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "CycleClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return CycleClass(
            self.ctx,
            scalar * self.c0,
            scalar * self.h,
            tuple(scalar * a for a in self.e),
            scalar * self.h2,
            tuple(scalar * a for a in self.r),
            scalar * self.pt,
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if isinstance(other, CycleClass):
            return mul(self, other)
        return NotImplemented


def mul(x: CycleClass, y: CycleClass, ctx: BlowupContext | None = None) -> CycleClass:
    """Graded product; degree > 3 components vanish."""
    if ctx is None:
        ctx = x.ctx
    if x.ctx != ctx or y.ctx != ctx:
        raise ContextMismatchError("cycle classes belong to different blowup contexts")
    n, d = ctx.n, ctx.d
    beta, alpha = ctx.beta, ctx.alpha

    c0 = x.c0 * y.c0
    h = x.c0 * y.h + y.c0 * x.h
    e = [x.c0 * y.e[i] + y.c0 * x.e[i] for i in range(n)]
    h2 = x.c0 * y.h2 + y.c0 * x.h2
    r = [x.c0 * y.r[i] + y.c0 * x.r[i] for i in range(n)]
    pt = x.c0 * y.pt + y.c0 * x.pt

    # degree 1 x degree 1
    h2 += x.h * y.h
    for i in range(n):
        cross = x.h * y.e[i] + x.e[i] * y.h
        if cross:
            r[i] += d * cross
    for i in range(n):
        if not x.e[i]:
            continue
        for j in range(n):
            c = x.e[i] * y.e[j]
            if not c:
                continue
            if i < j:
                r[j] -= beta[i] * c
            elif j < i:
                r[i] -= beta[j] * c
            else:
                h2 -= d * c
                r[i] -= alpha[i] * c
                for m in range(i):
                    r[m] -= beta[m] * c

    # degree 1 x degree 2 (H.H^2 = pt, E_k.R_k = -pt; the rest vanish)
    pt += x.h * y.h2 + y.h * x.h2
    for i in range(n):
        pt -= x.e[i] * y.r[i] + y.e[i] * x.r[i]

    return CycleClass(ctx, c0, h, tuple(e), h2, tuple(r), pt)


def surface_class(deg: int, k: int, ctx: BlowupContext) -> CycleClass:
    """deg*H minus the first k exceptional classes."""
    if not 0 <= k <= ctx.n:
        raise DomainError(f"level {k} outside 0..{ctx.n}")
    e = tuple(-1 if i < k else 0 for i in range(ctx.n))
    return ctx.zero()._replace(h=deg, e=e)


def canonical_class(k: int, ctx: BlowupContext) -> CycleClass:
    """-4H + E_1 + ... + E_k."""
    return -surface_class(4, k, ctx)


@dataclass(frozen=True)
class StExpansion:
    h2_coeff: int
    a: tuple[int, ...]


def st_expansion(s: int, t: int, ctx: BlowupContext) -> StExpansion:
    """Expand (sH - sum E)(tH - sum E) and read off the H^2/R coefficients.

    The H^2 coefficient is s*t - n*d, which vanishes exactly when the
    context has n = s*t/d levels.
    """
    product = mul(surface_class(s, ctx.n, ctx), surface_class(t, ctx.n, ctx))
    return StExpansion(product.h2, product.r)


def a_closed_form(
    s: int, t: int, d: int, g: int, p: Sequence[int], m: int
) -> int:
    """Closed form for the m-th ruling coefficient of the expansion above.

    -a_m = d(s+t) + sum_{i<m} beta_i + (n-m) beta_m + (2 - 4d - 2g),
    with n = s*t/d and p zero-padded to length n.
    """
    if d < 1 or (s * t) % d != 0:
        raise DomainError(f"curve degree {d} must divide s*t = {s * t}")
    n = s * t // d
    if not 1 <= m <= n:
        raise DomainError(f"index m={m} outside 1..{n}")
    if len(p) > n:
        raise DomainError(f"p has {len(p)} entries but n = {n}")
    padded = tuple(p) + (0,) * (n - len(p))
    beta = beta_from_p(s, d, g, padded)
    return -(
        d * (s + t)
        + sum(beta[: m - 1])
        + (n - m) * beta[m - 1]
        + (2 - 4 * d - 2 * g)
    )


# ---------------------------------------------------------------------------
# rendering


def _terms(x: CycleClass) -> list[tuple[int, str]]:
    out = [(x.c0, "1"), (x.h, "H")]
    out += [(c, f"E{i + 1}") for i, c in enumerate(x.e)]
    out.append((x.h2, "H^2"))
    out += [(c, f"R{i + 1}") for i, c in enumerate(x.r)]
    out.append((x.pt, "pt"))
    return [(c, name) for c, name in out if c]


def format_class(x: CycleClass) -> str:
    """Human rendering like "4H - E1 - E2" or "8R3 - pt"."""
    terms = _terms(x)
    if not terms:
        return "0"
    pieces = []
    for idx, (c, name) in enumerate(terms):
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}{name}"
        if idx == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def class_to_json(x: CycleClass) -> dict:
    return {
        "c0": x.c0,
        "h": x.h,
        "e": list(x.e),
        "h2": x.h2,
        "r": list(x.r),
        "pt": x.pt,
    }
