"""Field parameters (p, f, q = p^f) and the digit-rotation operator theta."""

from __future__ import annotations

from dataclasses import dataclass

# Everything is exact and desk-scale; larger q would make the bases
# (q(q-1) labels) and the constant computations impractical.
Q_CAP = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldParams:
    """Parameters of the residue field F_q, q = p^f.

    ``h`` is the degree of the base extension (a multiple of f); it is
    only used by the asymptotic and multiplicity layers and defaults to f.
    """

    p: int
    f: int
    h: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValueError(f"f = {self.f} must be >= 1")
        if self.p ** self.f > Q_CAP:
            raise ValueError(f"q = {self.p ** self.f} exceeds the cap {Q_CAP}")
        if self.h is not None and self.h % self.f != 0:
            raise ValueError(f"h = {self.h} is not a multiple of f = {self.f}")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def degree(self) -> int:
        """h if given, else f."""
        return self.h if self.h is not None else self.f

    def digits(self, n: int) -> list[int]:
        """Base-p digits of n, exactly f of them (n must fit in [0, q-1])."""
        if not 0 <= n <= self.q - 1:
            raise ValueError(f"label {n} out of range [0, {self.q - 1}]")
        out = []
        for _ in range(self.f):
            out.append(n % self.p)
            n //= self.p
        return out

    def from_digits(self, digits) -> int:
        n = 0
        for i, d in enumerate(digits):
            n += d * self.p ** i
        return n

    def theta_label(self, n: int, j: int = 1) -> int:
        """Rotate the base-p digits of a label in [0, q-1] by j positions.

        One rotation sends sum(a_i p^i) to a_{f-1} + a_0 p + ... + a_{f-2} p^{f-1}.
        """
        d = self.digits(n)
        j %= self.f
        rotated = d[-j:] + d[:-j] if j else d
        return self.from_digits(rotated)

    def theta_residue(self, m: int, j: int = 1) -> int:
        """Multiply a residue mod q-1 by p^j (theta on Z/(q-1)Z)."""
        if self.q == 2:
            return 0
        return (m * pow(self.p, j % self.f, self.q - 1)) % (self.q - 1)

    def residue(self, m: int) -> int:
        """Canonical representative of m mod q-1 (0 when q = 2)."""
        return m % (self.q - 1) if self.q > 2 else 0
