"""Sparse exact arithmetic in the Grothendieck ring of mod-p representations
of GL2(F_q).

Elements are finite maps from weight labels (n, m) to rational coefficients,
expressed either in the basis of irreducibles ("L") or of symmetric powers
("S"), both indexed by 0 <= n <= q-1 and m mod q-1.

Multiplication works digit-by-digit: an irreducible with label n is the
tensor product over Frobenius slots of symmetric powers of the digits of n,
so a product of two irreducibles expands slotwise by the Clebsch-Gordan rule
S_a (x) S_b = sum_t S_{a+b-2t}(t) and is then renormalized by a carry
automaton that pushes slot degrees back below p.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

from .params import FieldParams

Label = tuple[int, int]

# Structure constants of the L basis, keyed by (p, f) then by the unordered
# pair (a, b): [L_a][L_b] = sum of coeff * [L_n(t)]. Twists factor out, so
# the table has at most q^2 entries per field. Insertions are idempotent,
# which keeps the shared dict safe for concurrent use.
_SC_CACHE: dict[tuple[int, int], dict[tuple[int, int], dict[Label, int]]] = {}

# Columns of the S -> L base change ([S_n(0)] in the L basis) and of its
# inverse ([L_n(0)] in the S basis), keyed by (p, f).
_S_TO_L_CACHE: dict[tuple[int, int], list[dict[Label, int]]] = {}
_L_TO_S_CACHE: dict[tuple[int, int], list[dict[Label, int]]] = {}


class RingElement:
    """An element of the Grothendieck ring with exact rational coefficients.

    Immutable by convention: all operations return new elements. ``terms``
    maps labels (n, m) to nonzero Fractions.
    """

    __slots__ = ("params", "basis", "terms")

    def __init__(self, params: FieldParams, basis: str,
                 terms: Mapping[Label, Fraction] | Iterable = ()):
        if basis not in ("L", "S"):
            raise ValueError(f"unknown basis tag {basis!r}")
        q = params.q
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Label, Fraction] = {}
        for (n, m), c in items:
            if not 0 <= n <= q - 1:
                raise ValueError(f"label n = {n} out of range [0, {q - 1}]")
            c = Fraction(c)
            if c == 0:
                continue
            key = (n, params.residue(m))
            prev = clean.get(key)
            total = c if prev is None else prev + c
            if total == 0:
                clean.pop(key, None)
            else:
                clean[key] = total
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params: FieldParams, basis: str = "L") -> "RingElement":
        return cls(params, basis, ())

    @classmethod
    def L(cls, params: FieldParams, n: int, m: int = 0) -> "RingElement":
        return cls(params, "L", {(n, m): Fraction(1)})

    @classmethod
    def S(cls, params: FieldParams, n: int, m: int = 0) -> "RingElement":
        return cls(params, "S", {(n, m): Fraction(1)})

    # -- basic structure ---------------------------------------------------

    def coeff(self, n: int, m: int) -> Fraction:
        return self.terms.get((n, self.params.residue(m)), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Label, Fraction]]:
        return sorted(self.terms.items())

    def _key(self):
        return (self.params.p, self.params.f, self.basis,
                tuple(self.sorted_terms()))

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if (self.params.p, self.params.f) != (other.params.p, other.params.f):
            return False
        if self.basis != other.basis:
            return self.to_basis("L").terms == other.to_basis("L").terms
        return self.terms == other.terms

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (n, m), c in self.sorted_terms():
            lbl = f"[{self.basis}_{n}({m})]"
            bits.append(lbl if c == 1 else f"{c}*{lbl}")
        return " + ".join(bits)

    # -- linear operations -------------------------------------------------

    def _same_kind(self, other: "RingElement"):
        if (self.params.p, self.params.f) != (other.params.p, other.params.f):
            raise ValueError("field parameter mismatch")
        if self.basis != other.basis:
            raise ValueError("basis mismatch; convert explicitly")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._same_kind(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            t = out.get(k, Fraction(0)) + c
            if t == 0:
                out.pop(k, None)
            else:
                out[k] = t
        return RingElement(self.params, self.basis, out)

    def __neg__(self) -> "RingElement":
        return self.scale(-1)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, c) -> "RingElement":
        c = Fraction(c)
        if c == 0:
            return RingElement.zero(self.params, self.basis)
        return RingElement(self.params, self.basis,
                           {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- twists ------------------------------------------------------------

    def det_twist(self, i: int) -> "RingElement":
        """Shift every label (n, m) to (n, m + i); works in either basis."""
        return RingElement(self.params, self.basis,
                           {(n, m + i): c for (n, m), c in self.terms.items()})

    def frobenius_twist(self, j: int = 1) -> "RingElement":
        """Apply the j-th power of Frobenius: (n, m) -> (theta^j n, theta^j m)."""
        v = self.to_basis("L")
        pr = self.params
        out: dict[Label, Fraction] = {}
        for (n, m), c in v.terms.items():
            out[(pr.theta_label(n, j), pr.theta_residue(m, j))] = c
        res = RingElement(pr, "L", out)
        return res if self.basis == "L" else res.to_basis(self.basis)

    # -- basis change ------------------------------------------------------

    def to_basis(self, target: str) -> "RingElement":
        return convert_basis(self, target)

    # -- invariants --------------------------------------------------------

    def dimension(self) -> Fraction:
        """Linear extension of dim; basis independent."""
        pr = self.params
        total = Fraction(0)
        for (n, m), c in self.terms.items():
            if self.basis == "S":
                d = n + 1
            else:
                d = 1
                for digit in pr.digits(n):
                    d *= digit + 1
            total += c * d
        return total

    def central_character(self) -> int | None:
        """Common value of n + 2m mod q-1 over all terms, or None."""
        qm1 = max(self.params.q - 1, 1)
        alpha = None
        for (n, m), _ in self.terms.items():
            a = (n + 2 * m) % qm1
            if alpha is None:
                alpha = a
            elif a != alpha:
                return None
        return alpha

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "p": self.params.p,
            "f": self.params.f,
            "basis": self.basis,
            "terms": [
                {"n": n, "m": m, "coeff": f"{c.numerator}/{c.denominator}"}
                for (n, m), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RingElement":
        params = FieldParams(data["p"], data["f"])
        terms = {}
        for t in data["terms"]:
            terms[(t["n"], t["m"])] = Fraction(t["coeff"])
        return cls(params, data["basis"], terms)


# ---------------------------------------------------------------------------
# theta dispatch (labels in [0, q-1] rotate digits; residues multiply by p^j)

def theta_apply(params: FieldParams, x: int, j: int, kind: str = "label") -> int:
    if kind == "label":
        return params.theta_label(x, j)
    if kind == "residue":
        return params.theta_residue(x, j)
    raise ValueError(f"unknown kind {kind!r}")


def det_twist(v: RingElement, i: int) -> RingElement:
    return v.det_twist(i)


def frobenius_twist(v: RingElement, j: int = 1) -> RingElement:
    return v.frobenius_twist(j)


def dimension(v: RingElement) -> Fraction:
    return v.dimension()


def central_character(v: RingElement) -> int | None:
    return v.central_character()


# ---------------------------------------------------------------------------
# Structure constants via the digit-carry automaton

def _normalize_states(params: FieldParams, initial) -> dict[Label, int]:
    """Run the carry automaton on the given monomial states.

    A state is (slot degrees, pending carries per slot, global twist).
    Overflowing slots (degree in [p, 2p-2]) split as
        S_c -> [degree c-p, carry S_1 into the next slot]
             + [degree 2p-2-c, extra twist (c-p+1) at this slot],
    resolved greedily (largest degree first, smallest index on ties).
    A pending carry at a slot applies only once that slot's degree is <= p-1,
    via S_d (x) S_1 = S_{d+1} + S_{d-1}(1). Terminal states are labels.
    """
    p, f = params.p, params.f
    qm1 = max(params.q - 1, 1)
    result: dict[Label, int] = {}
    stack = list(initial)
    while stack:
        degrees, carries, twist, coeff = stack.pop()
        over = [i for i in range(f) if degrees[i] >= p]
        if over:
            i = max(over, key=lambda k: (degrees[k], -k))
            c = degrees[i]
            assert c <= 2 * p - 2, "carry-automaton safety violated"
            d1 = list(degrees)
            d1[i] = c - p
            c1 = list(carries)
            c1[(i + 1) % f] += 1
            stack.append((tuple(d1), tuple(c1), twist, coeff))
            d2 = list(degrees)
            d2[i] = 2 * p - 2 - c
            stack.append((tuple(d2), carries,
                          twist + (c - p + 1) * p ** i, coeff))
            continue
        pending = [j for j in range(f) if carries[j] > 0]
        if pending:
            j = pending[0]
            d = degrees[j]
            c1 = list(carries)
            c1[j] -= 1
            d1 = list(degrees)
            d1[j] = d + 1
            stack.append((tuple(d1), tuple(c1), twist, coeff))
            if d >= 1:
                d2 = list(degrees)
                d2[j] = d - 1
                stack.append((tuple(d2), tuple(c1), twist + p ** j, coeff))
            continue
        n = params.from_digits(degrees)
        key = (n, twist % qm1)
        result[key] = result.get(key, 0) + coeff
    return result


def structure_constants(params: FieldParams, a: int, b: int) -> dict[Label, int]:
    """L-basis expansion of [L_a][L_b] (twists shifted out): label -> coeff."""
    p, f = params.p, params.f
    table = _SC_CACHE.setdefault((p, f), {})
    key = (a, b) if a <= b else (b, a)
    hit = table.get(key)
    if hit is not None:
        return hit
    da, db = params.digits(a), params.digits(b)
    initial = []
    for ts in itertools.product(*(range(min(da[i], db[i]) + 1)
                                  for i in range(f))):
        degrees = tuple(da[i] + db[i] - 2 * ts[i] for i in range(f))
        twist = sum(ts[i] * p ** i for i in range(f))
        initial.append((degrees, (0,) * f, twist, 1))
    result = _normalize_states(params, initial)
    table[key] = result
    return result


def multiply(v: RingElement, w: RingElement) -> RingElement:
    """Product in the ring, returned in the L basis."""
    if (v.params.p, v.params.f) != (w.params.p, w.params.f):
        raise ValueError("field parameter mismatch")
    params = v.params
    v = v.to_basis("L")
    w = w.to_basis("L")
    qm1 = max(params.q - 1, 1)
    out: dict[Label, Fraction] = {}
    for (a, x), cv in v.terms.items():
        for (b, y), cw in w.terms.items():
            c = cv * cw
            shift = x + y
            for (n, t), k in structure_constants(params, a, b).items():
                key = (n, (t + shift) % qm1)
                total = out.get(key, Fraction(0)) + c * k
                if total == 0:
                    out.pop(key, None)
                else:
                    out[key] = total
    return RingElement(params, "L", out)


# ---------------------------------------------------------------------------
# Base change between the S and L bases

def _s_to_l_columns(params: FieldParams) -> list[dict[Label, int]]:
    """[S_n(0)] in the L basis for 0 <= n <= q-1, by the Glover recursion
    [S_n] = [S_{n-1}][L_1] - [S_{n-2}](1)."""
    key = (params.p, params.f)
    hit = _S_TO_L_CACHE.get(key)
    if hit is not None:
        return hit
    q = params.q
    qm1 = max(q - 1, 1)
    cols: list[dict[Label, int]] = [{(0, 0): 1}]
    if q >= 2:
        cols.append({(1, 0): 1})
    for n in range(2, q):
        prev, prev2 = cols[n - 1], cols[n - 2]
        acc: dict[Label, int] = {}
        for (a, x), c in prev.items():
            for (b, t), k in structure_constants(params, a, 1).items():
                lbl = (b, (t + x) % qm1)
                acc[lbl] = acc.get(lbl, 0) + c * k
        for (a, x), c in prev2.items():
            lbl = (a, (x + 1) % qm1)
            acc[lbl] = acc.get(lbl, 0) - c
        cols.append({k: c for k, c in acc.items() if c != 0})
    _S_TO_L_CACHE[key] = cols
    return cols


def _l_to_s_columns(params: FieldParams) -> list[dict[Label, int]]:
    """[L_n(0)] in the S basis, inverting the unit-triangular S -> L change."""
    key = (params.p, params.f)
    hit = _L_TO_S_CACHE.get(key)
    if hit is not None:
        return hit
    q = params.q
    qm1 = max(q - 1, 1)
    s_cols = _s_to_l_columns(params)
    cols: list[dict[Label, int]] = []
    for n in range(q):
        acc: dict[Label, int] = {(n, 0): 1}
        for (i, j), c in s_cols[n].items():
            if (i, j) == (n, 0):
                continue
            # constituents of S_n other than L_n have i < n (triangularity)
            for (a, x), k in cols[i].items():
                lbl = (a, (x + j) % qm1)
                acc[lbl] = acc.get(lbl, 0) - c * k
        cols.append({k: c for k, c in acc.items() if c != 0})
    _L_TO_S_CACHE[key] = cols
    return cols


def symm_to_L(params: FieldParams, n: int, m: int = 0) -> RingElement:
    """L-basis expansion of [S_n(m)] for 0 <= n <= q-1."""
    if not 0 <= n <= params.q - 1:
        raise ValueError(f"n = {n} out of range [0, {params.q - 1}]")
    col = _s_to_l_columns(params)[n]
    return RingElement(params, "L",
                       {(a, x + m): Fraction(c) for (a, x), c in col.items()})


def convert_basis(v: RingElement, target: str) -> RingElement:
    if target not in ("L", "S"):
        raise ValueError(f"unknown basis tag {target!r}")
    if v.basis == target:
        return v
    params = v.params
    cols = _s_to_l_columns(params) if target == "L" else _l_to_s_columns(params)
    out: dict[Label, Fraction] = {}
    for (n, m), c in v.terms.items():
        for (a, x), k in cols[n].items():
            key = (a, params.residue(x + m))
            total = out.get(key, Fraction(0)) + c * k
            if total == 0:
                out.pop(key, None)
            else:
                out[key] = total
    return RingElement(params, target, out)
