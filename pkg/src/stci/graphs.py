"""Standard labeled graphs tracking strict transforms of rulings.

A graph starts as a single vertex k and grows by two operations, each
adding the vertex m+1 above the current maximum m:

* append ("+"): new edge (m, m+1);
* subdivide at l (an integer token, requires edge (l, m)): new edges
  (l, m+1) and (m, m+1), edge (l, m) removed.

Every standard graph is produced by a unique operation sequence, which
``decompose`` recovers from the edge set alone.  The multiplicity map mu
starts at 1 on the root and extends by mu(m+1) = mu(m) for "+" and
mu(m+1) = mu(m) + mu(l) for subdivision.

``strict_transform_class`` solves the triangular system relating total
and strict ruling transforms and returns the class of the strict
transform over the ruling basis R_1..R_n.  ``snort_check`` and
``cone_decompose`` decide, by two independent computations, whether an
integer vector lies in the cone spanned by R_n, R_{n-1}-R_n, ...,
R_1 - R_2 - ... - R_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import DomainError, ParseError

Op = Union[str, int]  # "+" or the subdivision vertex label

PLUS: Op = "+"


@dataclass(frozen=True)
class LabeledGraph:
    """Standard labeled graph on the vertex interval [base, top].

    ``mu[v - base]`` is the multiplicity of vertex v.  ``history`` replays
    from the single vertex ``base`` to exactly this graph.  Build
    instances with single_vertex / apply_op / replay / from_parts.
    """

    base: int
    top: int
    edges: frozenset[tuple[int, int]]
    mu: tuple[int, ...]
    history: tuple[Op, ...]

    @property
    def vertices(self) -> range:
        return range(self.base, self.top + 1)

    def mu_of(self, v: int) -> int:
        if not self.base <= v <= self.top:
            raise DomainError(f"vertex {v} outside [{self.base}, {self.top}]")
        return self.mu[v - self.base]

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


def single_vertex(k: int) -> LabeledGraph:
    return LabeledGraph(k, k, frozenset(), (1,), ())


def apply_op(graph: LabeledGraph, op: Op) -> LabeledGraph:
    """Apply one standard operation, returning the grown graph."""
    m = graph.top
    new = m + 1
    if op == PLUS:
        edges = set(graph.edges)
        edges.add((m, new))
        mu = graph.mu + (graph.mu_of(m),)
    else:
        if not isinstance(op, int):
            raise DomainError(f"operation must be '+' or a vertex label, got {op!r}")
        l = op
        key = (min(l, m), max(l, m))
        if l == m or key not in graph.edges:
            raise DomainError(f"subdivision at {l} requires edge ({l}, {m})")
        edges = set(graph.edges)
        edges.remove(key)
        edges.add((l, new))
        edges.add((m, new))
        mu = graph.mu + (graph.mu_of(m) + graph.mu_of(l),)
    return LabeledGraph(graph.base, new, frozenset(edges), mu, graph.history + (op,))


def replay(base: int, ops: Iterable[Op]) -> LabeledGraph:
    graph = single_vertex(base)
    for op in ops:
        graph = apply_op(graph, op)
    return graph


def decompose(graph: LabeledGraph) -> tuple[Op, ...]:
    """Recover the unique operation sequence from the edge set alone.

    Raises DomainError if the edges do not form a standard labeled graph
    on [base, top].
    """
    edges = {tuple(sorted(e)) for e in graph.edges}
    ops: list[Op] = []
    for v in range(graph.top, graph.base, -1):
        nbrs = {a if b == v else b for (a, b) in edges if v in (a, b)}
        if any(w > v for w in nbrs):
            raise DomainError("not a standard labeled graph: edge above current top")
        if nbrs == {v - 1}:
            ops.append(PLUS)
            edges.remove((v - 1, v))
        elif len(nbrs) == 2 and (v - 1) in nbrs:
            (l,) = nbrs - {v - 1}
            restored = (min(l, v - 1), max(l, v - 1))
            if restored in edges:
                raise DomainError("not a standard labeled graph: undo collides")
            edges.remove((min(l, v), v))
            edges.remove((v - 1, v))
            edges.add(restored)
            ops.append(l)
        else:
            raise DomainError("not a standard labeled graph: bad top neighborhood")
    if edges:
        raise DomainError("not a standard labeled graph: leftover edges")
    ops.reverse()
    result = tuple(ops)
    if replay(graph.base, result).edges != graph.edges:
        raise DomainError("not a standard labeled graph: replay mismatch")
    return result


def from_parts(base: int, top: int, edges: Iterable[Iterable[int]]) -> LabeledGraph:
    """Validate an externally supplied graph and rebuild its history/mu."""
    if top < base:
        raise DomainError("empty vertex interval")
    edge_set = frozenset(tuple(sorted(e)) for e in edges)
    for a, b in edge_set:
        if a == b or not (base <= a <= top and base <= b <= top):
            raise DomainError(f"bad edge ({a}, {b})")
    probe = LabeledGraph(base, top, edge_set, (0,) * (top - base + 1), ())
    return replay(base, decompose(probe))


def graph_order(graph: LabeledGraph) -> int:
    """r - base, where r is the unique neighbor of the smallest vertex."""
    if graph.top == graph.base:
        raise DomainError("order is undefined for a single-vertex graph")
    nbrs = graph.neighbors(graph.base)
    if len(nbrs) != 1:
        raise DomainError("not a standard labeled graph: root degree != 1")
    return nbrs.pop() - graph.base


def truncate(graph: LabeledGraph) -> LabeledGraph:
    """Remove the smallest vertex, re-based as a standard graph.

    The history [+, base^[p], o_1..o_r] (o_1 != base) rewrites to
    [+^[p], o_1..o_r] when p >= 1, to [+, o_2..o_r] when p = 0 and r >= 1,
    and to the empty sequence otherwise.
    """
    hist = graph.history
    if not hist:
        raise DomainError("cannot truncate a single-vertex graph")
    if hist[0] != PLUS:
        raise DomainError("malformed history: first operation must be '+'")
    p = 0
    while 1 + p < len(hist) and hist[1 + p] == graph.base:
        p += 1
    rest = hist[1 + p:]
    if p >= 1:
        new_hist: tuple[Op, ...] = (PLUS,) * p + rest
    elif rest:
        new_hist = (PLUS,) + rest[1:]
    else:
        new_hist = ()
    return replay(graph.base + 1, new_hist)


def spitup_decomposition(graph: LabeledGraph) -> list[LabeledGraph]:
    """The truncations entering the multiplicity identity.

    For a graph of order p, returns [G - {k}, G - {k,k+1}, ...,
    G - {k..k+p-1}]; mu of the original graph equals the indicator of the
    root plus the zero-extended mu of each of these.
    """
    p = graph_order(graph)
    out = []
    cur = graph
    for _ in range(p):
        cur = truncate(cur)
        out.append(cur)
    return out


def strict_transform_class(
    graph: LabeledGraph, top: Optional[int] = None
) -> tuple[int, ...]:
    """Class of the strict transform of the root ruling, over R_1..R_n.

    The graph must live on [k, n] with k >= 1.  Solves the triangular
    system R_l = sum_j mu_{G_l}(j) * [strict transform of R_j], where G_l
    runs over the iterated truncations, and checks the solution has the
    expected shape: R_k alone when k = n, otherwise R_k minus a contiguous
    block R_{k+1} + ... + R_l.
    """
    n = graph.top if top is None else top
    if n != graph.top:
        raise DomainError(f"top level {n} does not match graph top {graph.top}")
    k = graph.base
    if k < 1:
        raise DomainError("ruling levels start at 1")

    truncations = [graph]
    for _ in range(k, n):
        truncations.append(truncate(truncations[-1]))

    # coefficient vectors over R_1..R_n, solved from level n downwards
    solved: dict[int, list[int]] = {}
    for l in range(n, k - 1, -1):
        g_l = truncations[l - k]
        vec = [0] * n
        vec[l - 1] = 1
        for j in range(l + 1, n + 1):
            m = g_l.mu_of(j)
            if m:
                for idx in range(n):
                    vec[idx] -= m * solved[j][idx]
        solved[l] = vec

    result = tuple(solved[k])
    _check_strict_transform_shape(result, k, n)
    return result


def _check_strict_transform_shape(vec: tuple[int, ...], k: int, n: int) -> None:
    if vec[k - 1] != 1 or any(vec[i] for i in range(k - 1)):
        raise AssertionError(f"unexpected strict-transform class {vec}")
    tail = vec[k:]
    minus = [i for i, c in enumerate(tail) if c]
    if any(tail[i] != -1 for i in minus):
        raise AssertionError(f"unexpected strict-transform class {vec}")
    if minus and minus != list(range(minus[0], minus[0] + len(minus))):
        raise AssertionError(f"non-contiguous strict-transform class {vec}")
    if minus and minus[0] != 0:
        raise AssertionError(f"gap after leading term in {vec}")


# ---------------------------------------------------------------------------
# the ruling cone


@dataclass(frozen=True)
class ConeCheck:
    feasible: bool
    margins: tuple[int, ...]


def snort_check(a: Iterable[int]) -> ConeCheck:
    """Evaluate the dyadic inequalities sum_{i<k} 2^(k-i-1) a_i + a_k >= 0."""
    a = tuple(a)
    margins = []
    for k in range(1, len(a) + 1):
        m = a[k - 1]
        for i in range(1, k):
            m += (1 << (k - i - 1)) * a[i - 1]
        margins.append(m)
    return ConeCheck(all(m >= 0 for m in margins), tuple(margins))


def cone_decompose(a: Iterable[int]) -> Optional[tuple[int, ...]]:
    """Coordinates of a over the cone generators, or None when infeasible.

    Generator g_k = R_k - R_{k+1} - ... - R_n, so the coordinates satisfy
    the recurrence c_k = a_k + c_1 + ... + c_{k-1}; feasible means all
    c_k >= 0.  This solve is independent of the power-of-two form used by
    snort_check, and the two must agree.
    """
    a = tuple(a)
    coords: list[int] = []
    for k in range(1, len(a) + 1):
        coords.append(a[k - 1] + sum(coords))
    if any(c < 0 for c in coords):
        return None
    return tuple(coords)


# ---------------------------------------------------------------------------
# serialization


def format_history(ops: Iterable[Op]) -> str:
    return ",".join(str(op) for op in ops)


def parse_history(text: str) -> tuple[Op, ...]:
    s = text.strip()
    if not s:
        return ()
    out: list[Op] = []
    for token in s.split(","):
        token = token.strip()
        if token == PLUS:
            out.append(PLUS)
        elif token.lstrip("-").isdigit():
            out.append(int(token))
        else:
            raise ParseError(f"bad history token {token!r}")
    return tuple(out)


def graph_to_json(graph: LabeledGraph) -> dict:
    return {
        "base": graph.base,
        "vertices": list(graph.vertices),
        "edges": sorted([a, b] for a, b in graph.edges),
        "mu": {str(v): graph.mu_of(v) for v in graph.vertices},
        "history": format_history(graph.history),
    }


def graph_from_json(data: dict) -> LabeledGraph:
    vertices = data["vertices"]
    graph = from_parts(min(vertices), max(vertices), data["edges"])
    if "mu" in data:
        for v in graph.vertices:
            if data["mu"].get(str(v)) != graph.mu_of(v):
                raise DomainError(f"stored mu disagrees at vertex {v}")
    return graph
