"""The Zhang twist of the polynomial ring by a linear automorphism.

sigma is an invertible (d+1)x(d+1) matrix over the base field, acting on
points by p -> M.p and on forms by pullback f -> f(M.x).  The twisted
product on graded pieces is

    a * b = a . (b o sigma^n)      where n = deg(a),

with sigma^n applied to the right-hand factor; degree-0 scalars stay
central and the product is associative.  Scaling the matrix by a nonzero
constant changes nothing at the level of ideals, subschemes, or verdicts
(homogeneous data rescales by a unit).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from . import linalg
from .polykernel import HomIdeal, Poly, PolyRing


@dataclass(frozen=True)
class DegreePiece:
    """Row-reduced basis of one graded component (of B, I, or R)."""

    n: int
    basis: tuple[Poly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class ProjAutomorphism:
    """Linear automorphism of P^d with cached inverse and powers."""

    def __init__(self, ring: PolyRing, rows):
        self.ring = ring
        field = ring.field
        n = ring.nvars
        matrix = tuple(tuple(row) for row in rows)
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ValueError(f"sigma matrix must be {n}x{n}")
        if linalg.rank(field, [list(r) for r in matrix]) != n:
            raise ValueError("sigma matrix is singular")
        self.matrix = matrix
        self._powers: dict[int, tuple] = {0: _identity(field, n), 1: matrix}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, ring: PolyRing, rows: list[list[str]]) -> "ProjAutomorphism":
        field = ring.field
        parsed = [[field.from_str(e) for e in row] for row in rows]
        return cls(ring, parsed)

    @classmethod
    def diagonal(cls, ring: PolyRing, entries) -> "ProjAutomorphism":
        field = ring.field
        n = ring.nvars
        vals = [field.from_str(e) if isinstance(e, str) else e for e in entries]
        rows = [
            [vals[i] if i == j else field.zero for j in range(n)] for i in range(n)
        ]
        return cls(ring, rows)

    @classmethod
    def identity(cls, ring: PolyRing) -> "ProjAutomorphism":
        return cls(ring, _identity(ring.field, ring.nvars))

    # -- matrix powers ------------------------------------------------------

    def power(self, n: int) -> tuple:
        with self._lock:
            return self._power_nolock(n)

    def _power_nolock(self, n: int) -> tuple:
        if n in self._powers:
            return self._powers[n]
        if n > 0:
            m = _mat_mul(self.ring.field, self._power_nolock(n - 1), self.matrix)
        else:
            m = _mat_mul(self.ring.field, self._power_nolock(n + 1), self._inverse_nolock())
        self._powers[n] = m
        return m

    def _inverse_nolock(self) -> tuple:
        if -1 not in self._powers:
            self._powers[-1] = _mat_inverse(self.ring.field, self.matrix)
        return self._powers[-1]

    # -- actions ------------------------------------------------------------

    def pullback(self, f: Poly, n: int = 1) -> Poly:
        """f o sigma^n: substitute x_i by the i-th row of M^n applied to x."""
        if n == 0 or f.is_zero():
            return f
        M = self.power(n)
        ring = self.ring
        images = []
        for i in range(ring.nvars):
            img = ring.zero()
            for j, c in enumerate(M[i]):
                if not ring.field.is_zero(c):
                    img = img + ring.variable(j).scale(c)
            images.append(img)
        return f.substitute(images)

    def pullback_ideal(self, I: HomIdeal, n: int = 1) -> HomIdeal:
        """I^{sigma^n}, generator-wise; V(I^{sigma^n}) = sigma^{-n}(V(I)).

        Saturation is preserved (an automorphism fixes the irrelevant ideal).
        """
        if n == 0:
            return I
        return HomIdeal(self.ring, [self.pullback(g, n) for g in I.gens], I.saturated)

    def act_point(self, coords: tuple, n: int = 1) -> tuple:
        """sigma^n(p) as raw coordinates M^n . p (no normalization)."""
        field = self.ring.field
        M = self.power(n)
        return tuple(
            _dot(field, row, coords) for row in M
        )

    def is_diagonal(self) -> bool:
        field = self.ring.field
        return all(
            field.is_zero(c)
            for i, row in enumerate(self.matrix)
            for j, c in enumerate(row)
            if i != j
        )

    def diagonal_entries(self) -> tuple:
        return tuple(self.matrix[i][i] for i in range(self.ring.nvars))

    def is_identity_projectively(self) -> bool:
        """True when the matrix is a scalar multiple of the identity."""
        field = self.ring.field
        if not self.is_diagonal():
            return False
        diag = self.diagonal_entries()
        return all(d == diag[0] for d in diag)

    def __eq__(self, other):
        return (
            isinstance(other, ProjAutomorphism)
            and self.ring == other.ring
            and self.matrix == other.matrix
        )

    def __repr__(self):
        return f"ProjAutomorphism({self.matrix})"


def _identity(field, n):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def _dot(field, row, vec):
    acc = field.zero
    for a, b in zip(row, vec):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _mat_mul(field, A, B):
    n = len(A)
    return tuple(
        tuple(
            _dot(field, A[i], tuple(B[k][j] for k in range(n))) for j in range(n)
        )
        for i in range(n)
    )


def _mat_inverse(field, M):
    n = len(M)
    aug = [list(M[i]) + [field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    reduced, pivots = linalg.rref(field, aug)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return tuple(tuple(reduced[i][n:]) for i in range(n))


# ---------------------------------------------------------------------------
# twisted elements and the star product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistedElement:
    """Degree-tagged homogeneous form, an element of B_n."""

    degree: int
    poly: Poly

    def __post_init__(self):
        if not self.poly.is_zero() and self.poly.degree != self.degree:
            raise ValueError(
                f"polynomial degree {self.poly.degree} != declared degree {self.degree}"
            )

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        if self.degree != other.degree:
            raise ValueError("cannot add twisted elements of different degrees")
        return TwistedElement(self.degree, self.poly + other.poly)

    def scale(self, c) -> "TwistedElement":
        return TwistedElement(self.degree, self.poly.scale(c))

    def __repr__(self):
        return f"TwistedElement(deg={self.degree}, {self.poly})"


def twist_multiply(a: TwistedElement, b: TwistedElement,
                   sigma: ProjAutomorphism) -> TwistedElement:
    """a * b = a . (b o sigma^deg(a)), of degree deg(a) + deg(b)."""
    twisted = sigma.pullback(b.poly, a.degree)
    return TwistedElement(a.degree + b.degree, a.poly * twisted)


def graded_piece_B(ring: PolyRing, n: int) -> DegreePiece:
    """Monomial basis of B_n (all degree-n forms; independent of sigma)."""
    from .polykernel import monomials_of_degree

    if n < 0:
        return DegreePiece(n, ())
    return DegreePiece(n, tuple(ring.monomial(m) for m in monomials_of_degree(ring, n)))
