"""Degree-by-degree construction of the geometric idealizer inside the twist.

Given the saturated ideal I of a closed subscheme Z of P^d and a linear
automorphism sigma, the degree-n piece of the idealizer is the degree-n part
of the colon ideal (I : I^{sigma^n}); degree 0 is the scalars.  The defining
membership property ("x star I stays in I") is available both as a per-element
finite-horizon oracle and as an exhaustive subspace computation, so the two
routes can be compared exactly on small degrees.

The colon route and the membership route agree whenever the oracle horizon M
is at least the maximal generator degree of the saturated ideal (the tested
pieces then generate the pulled-back ideal); the oracle is one-sided below
that horizon and is documented as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .polykernel import (
    HomIdeal,
    Poly,
    PolyRing,
    degree_piece_basis,
    dim_full_space,
    dim_ideal_piece,
    hilbert_function,
    ideal_equal,
    ideal_quotient,
    monomials_of_degree,
    normal_form,
    saturate,
    unit_ideal,
)
from .twist import DegreePiece, ProjAutomorphism, TwistedElement, twist_multiply


class SceneVerificationError(ValueError):
    """A declared decomposition or flag failed verification."""


@dataclass
class IdealizerScene:
    """The data (P^d, sigma, Z): ring, automorphism, saturated ideal of Z.

    declared_components, when given, must intersect to the ideal of Z; each
    may carry a declared associated prime (checked to contain the component).
    """

    ring: PolyRing
    sigma: ProjAutomorphism
    ideal: HomIdeal
    declared_components: tuple[tuple[HomIdeal, HomIdeal | None], ...] = ()
    gorenstein_z: bool = False
    smooth_z: bool = False
    _colon_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.ideal.is_zero_ideal():
            raise SceneVerificationError("Z must be a proper nonempty subscheme (zero ideal given)")
        sat = saturate(self.ideal)
        if sat.is_unit():
            raise SceneVerificationError("ideal saturates to the unit ideal (empty Z)")
        self.ideal = sat
        self._verify_components()

    @property
    def d(self) -> int:
        return self.ring.nvars - 1

    def _verify_components(self):
        if not self.declared_components:
            return
        meet = None
        for comp, prime in self.declared_components:
            meet = comp if meet is None else _meet(meet, comp)
            if prime is not None:
                for g in comp.gens:
                    if not prime.contains(g):
                        raise SceneVerificationError(
                            f"declared prime {prime} does not contain component generator {g}"
                        )
        bound = max(self.ideal.max_gen_degree(), meet.max_gen_degree()) + 2
        for n in range(bound + 1):
            if hilbert_function(meet, n) != hilbert_function(self.ideal, n):
                raise SceneVerificationError(
                    "declared components do not intersect to the scene ideal "
                    f"(Hilbert functions diverge at degree {n})"
                )
        if not ideal_equal(meet, self.ideal):
            raise SceneVerificationError(
                "declared components do not intersect to the scene ideal"
            )

    # -- core pieces --------------------------------------------------------

    def colon_ideal(self, n: int) -> HomIdeal:
        """(I : I^{sigma^n}), cached; saturated since I is."""
        if n not in self._colon_cache:
            pulled = self.sigma.pullback_ideal(self.ideal, n)
            self._colon_cache[n] = ideal_quotient(self.ideal, pulled)
        return self._colon_cache[n]

    def veronese(self, v: int) -> "IdealizerScene":
        """Scene for the v-th power of sigma with the same Z."""
        sv = ProjAutomorphism(self.ring, self.sigma.power(v))
        return IdealizerScene(self.ring, sv, self.ideal,
                              self.declared_components, self.gorenstein_z, self.smooth_z)


def _meet(a: HomIdeal, b: HomIdeal) -> HomIdeal:
    from .polykernel import intersect

    return intersect(a, b)


def idealizer_piece(scene: IdealizerScene, n: int) -> DegreePiece:
    """Row-reduced basis of R_n = ((I : I^{sigma^n}))_n; R_0 is the scalars."""
    if n < 0:
        return DegreePiece(n, ())
    if n == 0:
        return DegreePiece(0, (scene.ring.one(),))
    return DegreePiece(n, tuple(degree_piece_basis(scene.colon_ideal(n), n)))


def membership_oracle(x: TwistedElement, scene: IdealizerScene, M: int) -> bool:
    """Finite-horizon test of the defining property: x star I_m inside I_(n+m)
    for all 0 <= m <= M.

    Exact (two-sided) when M is at least the maximal generator degree of the
    saturated scene ideal; otherwise a necessary condition only.
    """
    if x.is_zero() or x.degree == 0:
        return True
    I = scene.ideal
    for m in range(0, M + 1):
        for b in degree_piece_basis(I, m):
            prod = twist_multiply(x, TwistedElement(m, b), scene.sigma)
            if not I.contains(prod.poly):
                return False
    return True


def exhaustive_oracle_piece(scene: IdealizerScene, n: int, M: int) -> DegreePiece:
    """The full subspace of B_n passing the membership oracle at horizon M.

    Solves the linear conditions coefficient-wise: for every m <= M and every
    basis form b of I_m, the product x . (b o sigma^n) must reduce to zero
    modulo I.  Returns the row-reduced basis, comparable with the colon piece.
    """
    ring = scene.ring
    fieldk = ring.field
    if n == 0:
        return DegreePiece(0, (ring.one(),))
    monos = monomials_of_degree(ring, n)
    gb = list(scene.ideal.groebner())

    rows: list[list] = []  # one row per (constraint-monomial) pair, columns = monos
    constraints: list[dict] = []  # residue terms per basis monomial, per (m, b)
    for m in range(0, M + 1):
        for b in degree_piece_basis(scene.ideal, m):
            twisted = scene.sigma.pullback(b, n)
            residues = []
            for mu in monos:
                prod = twisted.term_mul(fieldk.one, mu)
                residues.append(normal_form(prod, gb))
            # collect target monomials appearing in any residue
            targets = sorted({t for r in residues for t in r.terms}, key=ring.order.key)
            for t in targets:
                rows.append([r.terms.get(t, fieldk.zero) for r in residues])
    if not rows:
        basis = [ring.monomial(m) for m in monos]
        return DegreePiece(n, tuple(basis))
    kernel = linalg.kernel_basis(fieldk, rows, len(monos))
    vecs, _ = linalg.rref(fieldk, kernel)
    out = []
    for v in vecs:
        terms = {monos[i]: c for i, c in enumerate(v) if not fieldk.is_zero(c)}
        out.append(Poly(ring, terms))
    return DegreePiece(n, tuple(out))


def pieces_agree(a: DegreePiece, b: DegreePiece) -> bool:
    """Equality of spanned subspaces (both bases are row-reduced canonical)."""
    if a.n != b.n or a.dimension != b.dimension:
        return False
    return [p.terms for p in a.basis] == [p.terms for p in b.basis]


# ---------------------------------------------------------------------------
# stabilization and Hilbert data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilizationReport:
    """Per-degree comparison of the colon ideal with I itself."""

    bound: int
    table: tuple[str, ...]  # status for n = 1..bound: "equal" | "larger" | "unit"
    n0: int | None  # least n0 with colon = I for all n0 <= n <= bound
    degenerate: bool  # some colon is the unit ideal ("fixed-part present")

    @property
    def stabilized(self) -> bool:
        return self.n0 is not None


def stabilization_degree(scene: IdealizerScene, N: int) -> StabilizationReport:
    """Least n0 <= N with (I : I^{sigma^n}) = I for all n in [n0, N].

    A unit colon signals a sigma-invariant (fixed) part of Z; the scene is
    flagged degenerate and classification defers to component analysis.
    """
    statuses = []
    degenerate = False
    for n in range(1, N + 1):
        Q = scene.colon_ideal(n)
        if Q.is_unit():
            statuses.append("unit")
            degenerate = True
        elif ideal_equal(Q, scene.ideal):
            statuses.append("equal")
        else:
            statuses.append("larger")
    n0 = None
    for start in range(1, N + 1):
        if all(s == "equal" for s in statuses[start - 1:]):
            n0 = start
            break
    return StabilizationReport(N, tuple(statuses), n0, degenerate)


@dataclass(frozen=True)
class HilbertRow:
    n: int
    dim_B: int
    dim_I: int
    dim_R: int
    colon_stabilized: bool


def idealizer_hilbert(scene: IdealizerScene, N: int) -> list[HilbertRow]:
    """Dimension table of B_n, I_n, R_n for n = 0..N."""
    rows = [HilbertRow(0, 1, 0, 1, False)]
    for n in range(1, N + 1):
        Q = scene.colon_ideal(n)
        rows.append(
            HilbertRow(
                n,
                dim_full_space(scene.ring, n),
                dim_ideal_piece(scene.ideal, n),
                dim_ideal_piece(Q, n),
                ideal_equal(Q, scene.ideal),
            )
        )
    return rows
