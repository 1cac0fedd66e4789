"""Orbit dynamics of a linear automorphism and transversality certificates.

Verdicts about forward orbits meeting a subscheme come in two strengths.  A
horizon scan lists the hits n <= horizon exactly.  On top of that, two
certificate routes can bound ALL hits: for diagonal sigma the evaluation of a
generator along the orbit is an exponential sum with rational bases, and once
the dominant term strictly exceeds the rest (a monotone condition, located by
scanning) there are no further zeros; for unipotent sigma the evaluation is a
polynomial in n, whose integer roots are bounded by the Cauchy bound.  Signs
of negative bases are handled by splitting into even/odd subsequences, each
of which is a positive-base sum.

The critical-transversality certificate enumerates the reduced invariant
subschemes — for diagonal sigma with multiplicatively independent eigenvalue
ratios these are exactly the unions of coordinate subspaces — and checks
homological transversality against each union.  Algebraic independence of
eigenvalues is not available over the rationals; multiplicative independence
of the ratios is the implemented sufficient condition (it makes the closure
of the cyclic group a full torus) and every certificate carries a note saying
so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .fields import QQ
from .homology import homologically_transverse
from .idealizer import IdealizerScene
from .polykernel import (
    HomIdeal,
    PolyRing,
    _binomial_poly,
    _poly_n_add,
    _poly_n_mul,
    intersect,
)
from .twist import ProjAutomorphism

RATIONAL_SUBSTITUTE_NOTE = (
    "eigenvalue ratios multiplicatively independent used as the rational-"
    "arithmetic substitute for algebraically independent eigenvalues; "
    "characteristic-0 density theorem assumed"
)


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalPoint:
    """Projective point with exact coordinates, first nonzero coordinate 1."""

    field: object
    coords: tuple

    @classmethod
    def of(cls, field, values) -> "RationalPoint":
        vals = [
            field.from_str(v) if isinstance(v, str) else v for v in values
        ]
        pivot = next((v for v in vals if not field.is_zero(v)), None)
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = field.inv(pivot)
        return cls(field, tuple(field.mul(inv, v) for v in vals))

    @classmethod
    def parse(cls, field, text: str) -> "RationalPoint":
        """Accepts "[a0 : a1 : ... : ad]" (brackets optional)."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        parts = [p.strip() for p in body.split(":")]
        if len(parts) < 2:
            raise ValueError(f"not a projective point: {text!r}")
        return cls.of(field, parts)

    @property
    def d(self) -> int:
        return len(self.coords) - 1

    def apply(self, sigma: ProjAutomorphism, n: int = 1) -> "RationalPoint":
        return RationalPoint.of(self.field, sigma.act_point(self.coords, n))

    def on_subscheme(self, I: HomIdeal) -> bool:
        return all(
            self.field.is_zero(g.evaluate(self.coords)) for g in I.gens
        )

    def ideal(self, ring: PolyRing) -> HomIdeal:
        """The saturated ideal of the point: x_i - p_i x_k, k the pivot."""
        if ring.nvars != len(self.coords):
            raise ValueError("point/ring dimension mismatch")
        k = next(i for i, v in enumerate(self.coords) if not self.field.is_zero(v))
        gens = []
        for i in range(ring.nvars):
            if i == k:
                continue
            gens.append(ring.variable(i) - ring.variable(k).scale(self.coords[i]))
        return HomIdeal(ring, tuple(gens), saturated=True)

    def __str__(self):
        return "[" + " : ".join(self.field.to_str(c) for c in self.coords) + "]"


def point_order(p: RationalPoint, sigma: ProjAutomorphism, bound: int) -> int | None:
    """Least k in 1..bound with sigma^k(p) = p projectively, else None."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    q = p
    for k in range(1, bound + 1):
        q = q.apply(sigma)
        if q == p:
            return k
    return None


# ---------------------------------------------------------------------------
# forward orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitReport:
    """Where the forward orbit of a point meets a subscheme.

    verdict is one of "certified-finite" (hits complete, none past n0),
    "finite-within-horizon" (scan only, no guarantee beyond), "infinite"
    (periodic orbit hitting, or identically-vanishing evaluation), or
    "inconclusive".  justification tags the certificate route.
    """

    point: RationalPoint
    horizon: int
    hits: tuple[int, ...]
    verdict: str
    n0: int | None = None
    period: int | None = None
    justification: str | None = None
    notes: tuple[str, ...] = ()


def _diagonal_class_bound(terms: dict, parity: int) -> int | None:
    """Least n with the dominant term strictly exceeding the rest, for the
    subsequence n = parity (mod 2); None when the class sum is identically 0.

    terms maps a rational base r to its coefficient; the class sum is
    sum(c * sign(r)^parity * |r|^n).
    """
    by_abs: dict[Fraction, Fraction] = {}
    for r, c in terms.items():
        s = c if (parity % 2 == 0 or r > 0) else -c
        key = abs(r)
        by_abs[key] = by_abs.get(key, Fraction(0)) + s
    by_abs = {r: c for r, c in by_abs.items() if c != 0}
    if not by_abs:
        return None
    top = max(by_abs)
    rest = [(r / top, abs(c)) for r, c in by_abs.items() if r != top]
    lead = abs(by_abs[top])
    n = 0
    while sum(c * rho ** n for rho, c in rest) >= lead:
        n += 1
    return n


def _orbit_exponential_terms(sigma: ProjAutomorphism, p: RationalPoint,
                             g) -> dict[Fraction, Fraction]:
    """g(sigma^n p) as sum(c * base^n): base per monomial is the eigenvalue
    product, terms with equal bases combined, zero coefficients dropped."""
    lams = sigma.diagonal_entries()
    out: dict[Fraction, Fraction] = {}
    for mono, c in g.terms.items():
        val = c
        base = Fraction(1)
        for i, e in enumerate(mono):
            if e:
                val *= p.coords[i] ** e
                base *= lams[i] ** e
        if val == 0:
            continue
        out[base] = out.get(base, Fraction(0)) + val
    return {b: c for b, c in out.items() if c != 0}


def _is_unipotent(sigma: ProjAutomorphism) -> bool:
    field = sigma.ring.field
    n = sigma.ring.nvars
    ident = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    N = [
        [field.sub(sigma.matrix[i][j], ident[i][j]) for j in range(n)]
        for i in range(n)
    ]
    power = ident
    for _ in range(n):
        power = [
            [
                _dot_row(field, power[i], [N[t][j] for t in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
    return all(field.is_zero(e) for row in power for e in row)


def _dot_row(field, row, col):
    acc = field.zero
    for a, b in zip(row, col):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _orbit_coordinate_polys(sigma: ProjAutomorphism, p: RationalPoint):
    """Coordinates of sigma^n(p) as polynomials in n (unipotent sigma only):
    sigma^n = sum_k C(n,k) N^k with N = sigma - I nilpotent."""
    field = sigma.ring.field
    nv = sigma.ring.nvars
    N = [
        [
            field.sub(sigma.matrix[i][j],
                      field.one if i == j else field.zero)
            for j in range(nv)
        ]
        for i in range(nv)
    ]
    vecs = [list(p.coords)]  # N^k p
    for _ in range(1, nv):
        prev = vecs[-1]
        vecs.append([_dot_row(field, N[i], prev) for i in range(nv)])
    coord_polys = []
    for i in range(nv):
        poly = (Fraction(0),)
        for k in range(nv):
            if field.is_zero(vecs[k][i]):
                continue
            binom = _binomial_poly(0, k)  # C(n, k)
            poly = _poly_n_add(poly, tuple(c * vecs[k][i] for c in binom))
        coord_polys.append(poly)
    return coord_polys


def _evaluate_gen_as_poly_in_n(g, coord_polys):
    total = (Fraction(0),)
    for mono, c in g.terms.items():
        term = (Fraction(c),)
        for i, e in enumerate(mono):
            for _ in range(e):
                term = _poly_n_mul(term, coord_polys[i])
        total = _poly_n_add(total, term)
    while total and total[-1] == 0:
        total = total[:-1]
    return total


def _cauchy_root_bound(coeffs) -> int:
    """Integer n0 with no roots of the coefficient-list polynomial >= n0."""
    top = coeffs[-1]
    bound = 1 + max((abs(c / top) for c in coeffs[:-1]), default=Fraction(0))
    n0 = int(bound) + 1
    return n0


def forward_orbit_hits(p: RationalPoint, sigma: ProjAutomorphism,
                       Z: HomIdeal, horizon: int) -> OrbitReport:
    """Hits {n >= 0 : sigma^n(p) in Z}, with a completeness certificate when
    one of the analytic routes applies.

    Routes, in order: periodicity (orbit revisits p within the horizon);
    dominant-term bounds for diagonal sigma (rational eigenvalues, signs
    split by parity); Cauchy root bounds for unipotent sigma (coordinates
    polynomial in n).  Otherwise the verdict is horizon-bounded only.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    field = sigma.ring.field

    def is_hit(q: RationalPoint) -> bool:
        return q.on_subscheme(Z)

    # scan, watching for periodicity
    orbit = [p]
    period = None
    for n in range(1, horizon + 1):
        q = orbit[-1].apply(sigma)
        if q == p and period is None:
            period = n
            break
        orbit.append(q)

    if period is not None:
        cycle_hits = [n for n, q in enumerate(orbit) if is_hit(q)]
        if cycle_hits:
            hits = tuple(
                n for n in range(horizon + 1) if (n % period) in cycle_hits
            )
            return OrbitReport(p, horizon, hits, "infinite", period=period,
                               justification="periodicity")
        return OrbitReport(p, horizon, (), "certified-finite", n0=period,
                           period=period, justification="periodicity")

    hits = [n for n, q in enumerate(orbit) if is_hit(q)]

    if sigma.is_diagonal() and field.char == 0:
        # dominant-term certificate, one bound per parity class
        class_bounds = {0: None, 1: None}
        identically_zero = True
        for parity in (0, 1):
            best = None
            for g in Z.gens:
                terms = _orbit_exponential_terms(sigma, p, g)
                b = _diagonal_class_bound(terms, parity)
                if b is not None:
                    identically_zero = False
                    best = b if best is None else min(best, b)
            class_bounds[parity] = best
        if identically_zero:
            # every generator vanishes along the whole orbit
            return OrbitReport(p, horizon,
                               tuple(range(horizon + 1)), "infinite",
                               justification="identically-zero-evaluation")
        if all(b is not None for b in class_bounds.values()):
            n0 = max(class_bounds.values())
            full = [
                n for n in range(max(horizon, n0) + 1)
                if is_hit(p.apply(sigma, n))
            ]
            return OrbitReport(p, horizon, tuple(full), "certified-finite",
                               n0=n0, justification="dominant-term")
        # one parity class identically zero, the other bounded: the zero
        # class hits forever
        return OrbitReport(p, horizon, tuple(hits), "infinite",
                           justification="identically-zero-evaluation",
                           notes=("one parity class vanishes identically",))

    if _is_unipotent(sigma):
        coord_polys = _orbit_coordinate_polys(sigma, p)
        bounds = []
        all_zero = True
        for g in Z.gens:
            q_poly = _evaluate_gen_as_poly_in_n(g, coord_polys)
            if q_poly:
                all_zero = False
                bounds.append(_cauchy_root_bound(q_poly))
        if all_zero:
            return OrbitReport(p, horizon, tuple(range(horizon + 1)),
                               "infinite",
                               justification="identically-zero-evaluation")
        n0 = min(bounds)
        full = [
            n for n in range(max(horizon, n0) + 1)
            if is_hit(p.apply(sigma, n))
        ]
        return OrbitReport(p, horizon, tuple(full), "certified-finite",
                           n0=n0, justification="polynomial-growth")

    verdict = "finite-within-horizon"
    if hits and hits[-1] >= horizon - 1:
        verdict = "inconclusive"
    return OrbitReport(p, horizon, tuple(hits), verdict,
                       notes=("no certificate route for this sigma",))


# ---------------------------------------------------------------------------
# multiplicative independence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultIndependence:
    """Independence certificate or relation witness for nonzero rationals."""

    values: tuple[Fraction, ...]
    primes: tuple[int, ...]
    rank: int
    independent: bool
    witness: tuple[int, ...] | None  # integer exponents with product 1


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    n = abs(n)
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_independence(values) -> MultIndependence:
    vals = tuple(Fraction(v) for v in values)
    if any(v == 0 for v in vals):
        raise ValueError("zero entry: multiplicative independence undefined")
    exps = []
    for v in vals:
        e = _factor(v.numerator)
        for q, k in _factor(v.denominator).items():
            e[q] = e.get(q, 0) - k
        exps.append({q: k for q, k in e.items() if k})
    primes = tuple(sorted({q for e in exps for q in e}))
    matrix = [[Fraction(e.get(q, 0)) for q in primes] for e in exps]
    rank = linalg.rank(QQ, [row[:] for row in matrix]) if primes else 0
    if rank == len(vals):
        return MultIndependence(vals, primes, rank, True, None)

    # relation: rational left-kernel vector of the exponent matrix
    transposed = [[matrix[i][j] for i in range(len(vals))] for j in range(len(primes))]
    if not primes:
        kern = [[Fraction(1)] + [Fraction(0)] * (len(vals) - 1)]
    else:
        kern = linalg.kernel_basis(QQ, transposed, len(vals))
    vec = kern[0]
    denom_lcm = 1
    for c in vec:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in vec]
    g = 0
    for c in ints:
        g = gcd(g, c)
    witness = [c // g for c in ints]
    # fix the sign: if the product is -1, squaring the relation kills it
    prod_sign = 1
    for v, e in zip(vals, witness):
        if v < 0 and e % 2:
            prod_sign = -prod_sign
    if prod_sign < 0:
        witness = [2 * e for e in witness]
    check = Fraction(1)
    for v, e in zip(vals, witness):
        check *= v ** e
    if check != 1:
        raise AssertionError("relation witness failed verification")
    return MultIndependence(vals, primes, rank, False, tuple(witness))


@dataclass(frozen=True)
class EigenData:
    """Eigenvalue summary of sigma used by the certificate gates."""

    eigenvalues: tuple | None
    diagonalizable: bool | None
    ratio_report: MultIndependence | None


def eigen_data(sigma: ProjAutomorphism) -> EigenData:
    if sigma.is_diagonal():
        lams = sigma.diagonal_entries()
        report = None
        if sigma.ring.field.char == 0:
            ratios = [lam / lams[0] for lam in lams[1:]]
            report = multiplicative_independence(ratios)
        return EigenData(tuple(lams), True, report)
    if _is_unipotent(sigma):
        ones = tuple(sigma.ring.field.one for _ in range(sigma.ring.nvars))
        return EigenData(ones, sigma.is_identity_projectively(), None)
    return EigenData(None, None, None)


# ---------------------------------------------------------------------------
# invariant coordinate subschemes
# ---------------------------------------------------------------------------

def _subset_key(s: tuple[int, ...]):
    # larger subsets (smaller subspaces) first, then lexicographic
    return (-len(s), s)


def _coordinate_families(d: int, max_union: int):
    """Antichains of proper nonempty subsets of {0..d}, in report order."""
    universe = list(range(d + 1))
    subsets = []
    for size in range(1, d + 1):  # proper: size <= d
        subsets.extend(tuple(c) for c in combinations(universe, size))
    subsets.sort(key=_subset_key)
    families = []

    def extend(start: int, chosen: tuple):
        if chosen:
            families.append(chosen)
        if len(chosen) == max_union:
            return
        for i in range(start, len(subsets)):
            s = subsets[i]
            if any(set(s) <= set(t) or set(t) <= set(s) for t in chosen):
                continue
            extend(i + 1, chosen + (s,))

    extend(0, ())
    families.sort(key=lambda fam: (len(fam), [_subset_key(s) for s in fam]))
    return families


def _family_ideal(ring: PolyRing, family) -> HomIdeal:
    parts = [
        HomIdeal(ring, tuple(ring.variable(i) for i in s), saturated=True)
        for s in family
    ]
    out = parts[0]
    for part in parts[1:]:
        out = intersect(out, part)
    return out


def _ratio_gate(sigma: ProjAutomorphism) -> bool:
    if not sigma.is_diagonal() or sigma.ring.field.char != 0:
        return False
    lams = sigma.diagonal_entries()
    if len(set(lams)) != len(lams):
        return False
    ratios = [lam / lams[0] for lam in lams[1:]]
    return multiplicative_independence(ratios).independent


def invariant_coordinate_subschemes(
    sigma: ProjAutomorphism, d: int | None = None, max_union: int = 1
) -> list[HomIdeal]:
    """Ideals of unions of at most max_union coordinate subspaces of P^d.

    For diagonal sigma with multiplicatively independent eigenvalue ratios
    these are exactly the reduced invariant subschemes (the ambient space and
    the empty scheme, both trivially transverse to everything, are omitted).
    """
    ring = sigma.ring
    if d is None:
        d = ring.nvars - 1
    if d != ring.nvars - 1:
        raise ValueError("dimension does not match sigma's ring")
    if not _ratio_gate(sigma):
        raise ValueError("invariant family not classified")
    return [
        _family_ideal(ring, fam) for fam in _coordinate_families(d, max_union)
    ]


# ---------------------------------------------------------------------------
# critical transversality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CTCertificate:
    """Outcome of checking Z against every reduced invariant subscheme."""

    status: str  # "certified" | "refuted" | "inconclusive"
    checked: int
    witness_family: tuple | None = None
    witness_ideal: HomIdeal | None = None
    witness_j: int | None = None
    reason: str | None = None
    notes: tuple[str, ...] = ()


def critical_transversality_certificate(scene: IdealizerScene) -> CTCertificate:
    """Certified iff Z is homologically transverse to every union of
    coordinate subspaces; refuted with the first failing union (smaller
    unions first, within a size the smaller subspaces first); inconclusive
    when sigma is outside the classified family or the field has positive
    characteristic.
    """
    sigma, ring = scene.sigma, scene.ring
    d = scene.d
    notes = (RATIONAL_SUBSTITUTE_NOTE,)
    if ring.field.char != 0:
        return CTCertificate("inconclusive", 0,
                             reason="characteristic-0 theorem assumed",
                             notes=notes)
    if not sigma.is_diagonal() or d > 3 or not _ratio_gate(sigma):
        return CTCertificate("inconclusive", 0,
                             reason="invariant family not classified",
                             notes=notes)
    families = _coordinate_families(d, max_union=2 ** (d + 1) - 2)
    checked = 0
    for fam in families:
        Y = _family_ideal(ring, fam)
        ok, j = homologically_transverse(scene.ideal, Y)
        checked += 1
        if not ok:
            return CTCertificate("refuted", checked, witness_family=fam,
                                 witness_ideal=Y, witness_j=j, notes=notes)
    return CTCertificate("certified", checked, notes=notes)
