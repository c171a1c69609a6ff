"""Combinatorics of principal-series decompositions.

Two 4-vertex graphs drive everything. Vertices carry digit functions; a
closed walk of length f assigns one function per Frobenius slot. Walks on
the first graph decompose a principal series V_n(m) into irreducibles; walks
on the second one list the principal series containing a given irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .params import FieldParams
from .ring import Label, RingElement

DECOMPOSITION = "decomposition"
ANTECEDENT = "antecedent"

VERTICES = ("TL", "TR", "BL", "BR")

# Common edge set of both graphs: loops at the top row, and the cycle
# structure BL->TL, TL->BR, TR->BL, BR->TR plus BL<->BR.
EDGES = frozenset({
    ("TL", "TL"), ("TR", "TR"),
    ("BL", "TL"), ("TL", "BR"),
    ("TR", "BL"), ("BR", "TR"),
    ("BL", "BR"), ("BR", "BL"),
})

RIGHT_COLUMN = frozenset({"TR", "BR"})


def vertex_function(graph: str, vertex: str, p: int):
    """Digit function attached to a vertex; the graphs differ only at BL."""
    if vertex == "TL":
        return lambda x: x
    if vertex == "TR":
        return lambda x: p - 1 - x
    if vertex == "BR":
        return lambda x: p - 2 - x
    if vertex == "BL":
        if graph == DECOMPOSITION:
            return lambda x: x - 1
        if graph == ANTECEDENT:
            return lambda x: x + 1
    raise ValueError(f"unknown graph/vertex {graph!r}/{vertex!r}")


@dataclass(frozen=True)
class ClosedPath:
    graph: str
    vertices: tuple[str, ...]

    def __post_init__(self):
        if self.graph not in (DECOMPOSITION, ANTECEDENT):
            raise ValueError(f"unknown graph tag {self.graph!r}")
        f = len(self.vertices)
        for i in range(f):
            edge = (self.vertices[i], self.vertices[(i + 1) % f])
            if edge not in EDGES:
                raise ValueError(f"{edge} is not an edge")

    def serialize(self) -> str:
        return ",".join(self.vertices)


_PATH_CACHE: dict[tuple[str, int], tuple[ClosedPath, ...]] = {}


def enumerate_closed_paths(graph: str, f: int) -> tuple[ClosedPath, ...]:
    """All closed walks of length f, in lexicographic vertex order."""
    if f < 1:
        raise ValueError("path length must be >= 1")
    key = (graph, f)
    hit = _PATH_CACHE.get(key)
    if hit is not None:
        return hit
    paths = []

    def extend(seq):
        if len(seq) == f:
            if (seq[-1], seq[0]) in EDGES:
                paths.append(ClosedPath(graph, tuple(seq)))
            return
        for v in VERTICES:
            if (seq[-1], v) in EDGES:
                extend(seq + [v])

    for start in sorted(VERTICES):
        extend([start])
    paths.sort(key=lambda c: c.vertices)
    result = tuple(paths)
    _PATH_CACHE[key] = result
    return result


def _digit_images(params: FieldParams, path: ClosedPath, n: int):
    """Images of the digits of n under the path's functions, or None if any
    image falls outside [0, p-1]."""
    p = params.p
    images = []
    for i, digit in enumerate(params.digits(n)):
        y = vertex_function(path.graph, path.vertices[i], p)(digit)
        if not 0 <= y <= p - 1:
            return None
        images.append(y)
    return images


def lambda_of_path(params: FieldParams, path: ClosedPath, n: int) -> int | None:
    """The label produced by a decomposition-graph path, or None if the path
    is incompatible with n."""
    if path.graph != DECOMPOSITION:
        raise ValueError("lambda is defined on decomposition-graph paths")
    if not 0 <= n <= params.q - 2 and not (params.q == 2 and n == 0):
        raise ValueError(f"n = {n} out of range [0, {params.q - 2}]")
    images = _digit_images(params, path, n)
    if images is None:
        return None
    return params.from_digits(images)


def mu_of_path(params: FieldParams, path: ClosedPath, n: int) -> int | None:
    """The antecedent label produced by an antecedent-graph path, or None."""
    if path.graph != ANTECEDENT:
        raise ValueError("mu is defined on antecedent-graph paths")
    if not 0 <= n <= params.q - 1:
        raise ValueError(f"n = {n} out of range [0, {params.q - 1}]")
    images = _digit_images(params, path, n)
    if images is None:
        return None
    return params.from_digits(images)


def ell_of_path(params: FieldParams, path: ClosedPath, n: int) -> int:
    """Determinant shift of the constituent cut out by a compatible path.

    Computed as (sum_i p^i (n_i - lambda_i(n_i))) / 2, with q - 1 added
    inside the half when the final vertex sits in the right column. The
    half is always integral; a failure here is a bug, not bad input.
    """
    if path.graph != DECOMPOSITION:
        raise ValueError("ell is defined on decomposition-graph paths")
    p = params.p
    images = _digit_images(params, path, n)
    if images is None:
        raise ValueError(f"path {path.serialize()} incompatible with n = {n}")
    total = sum(p ** i * (d - y)
                for i, (d, y) in enumerate(zip(params.digits(n), images)))
    if path.vertices[-1] in RIGHT_COLUMN:
        total += params.q - 1
    if total % 2 != 0:
        raise AssertionError("non-integral determinant shift (internal bug)")
    return (total // 2) % max(params.q - 1, 1)


_DIAMOND_CACHE: dict[tuple[int, int, int], RingElement] = {}


def diamond_decompose(params: FieldParams, n: int, m: int = 0) -> RingElement:
    """Irreducible constituents of the principal series V_n(m), n in [0, q-2].

    One constituent L_{lambda(n)}(m + ell(n)) per compatible closed path;
    all multiplicities are 1 and dimensions add up to q + 1.
    """
    q = params.q
    n_max = max(q - 2, 0)
    if not 0 <= n <= n_max:
        raise ValueError(f"n = {n} out of range [0, {n_max}]")
    key = (params.p, params.f, n)
    base = _DIAMOND_CACHE.get(key)
    if base is None:
        terms: dict[Label, Fraction] = {}
        for path in enumerate_closed_paths(DECOMPOSITION, params.f):
            lam = lambda_of_path(params, path, n)
            if lam is None:
                continue
            lbl = (lam, ell_of_path(params, path, n))
            terms[lbl] = terms.get(lbl, Fraction(0)) + 1
        base = RingElement(params, "L", terms)
        _DIAMOND_CACHE[key] = base
    return base.det_twist(m) if m else base


def explain_decomposition(params: FieldParams, n: int) -> list[dict]:
    """Per-path report used by the CLI --explain flag."""
    rows = []
    for path in enumerate_closed_paths(DECOMPOSITION, params.f):
        lam = lambda_of_path(params, path, n)
        row = {"path": path.serialize(), "compatible": lam is not None}
        if lam is not None:
            row["lambda"] = lam
            row["ell"] = ell_of_path(params, path, n)
        rows.append(row)
    return rows


def antecedents(params: FieldParams, n: int, m: int = 0) -> set[Label]:
    """All (n', m') with n' in [0, q-2] such that V_{n'}(m') contains L_n(m)."""
    q = params.q
    if not 0 <= n <= q - 1:
        raise ValueError(f"n = {n} out of range [0, {q - 1}]")
    result: set[Label] = set()
    for path in enumerate_closed_paths(ANTECEDENT, params.f):
        nprime = mu_of_path(params, path, n)
        if nprime is None or nprime == q - 1:
            continue
        mirror = ClosedPath(DECOMPOSITION, path.vertices)
        ell = ell_of_path(params, mirror, nprime)
        result.add((nprime, params.residue(m - ell)))
    return result


def omega(params: FieldParams, n: int) -> int:
    """Number of principal series containing L_n(m) (independent of m).

    Computed both by counting antecedent paths and by the closed form
    2^f - 1 for n = 0, else 2^(f - r_n) with r_n the number of base-p
    digits of n equal to p - 1; the two must agree.
    """
    counted = len(antecedents(params, n, 0))
    if n == 0:
        closed = 2 ** params.f - 1
    else:
        r_n = sum(1 for d in params.digits(n) if d == params.p - 1)
        closed = 2 ** (params.f - r_n)
    assert counted == closed, (n, counted, closed)
    return closed
