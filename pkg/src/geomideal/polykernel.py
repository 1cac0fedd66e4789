"""Exact multivariate polynomial arithmetic and homogeneous ideal operations.

The commutative kernel everything else sits on: polynomials over Q or GF(p)
in variables x0..x9, reduced Groebner bases (Buchberger with the two standard
pair-elimination criteria), colon ideals, intersections, saturation, and
Hilbert functions / polynomials of graded quotients.

Representation notes.  Monomials are plain exponent tuples of length
nvars = d + 1; a Poly is a dict {exponent tuple: scalar} plus a cached
homogeneous-degree tag (None when the terms mix degrees, which only happens
inside elimination internals).  Term orders are key functions on exponent
tuples: bigger key = bigger monomial.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold

from .fields import QQ, PrimeField, RationalField


class ResourceCapError(RuntimeError):
    """An iteration or size cap was exceeded (exit code 4 at the CLI)."""


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------

class TermOrder:
    """Monomial well-order given by a key function on exponent tuples.

    kind is one of "degrevlex", "lex", "elim" (single trailing auxiliary
    variable eliminated first — used by the intersection algorithm).
    An optional variable priority permutation reorders coordinates before
    the comparison.
    """

    def __init__(self, kind: str, nvars: int, perm: tuple[int, ...] | None = None):
        if kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown term order kind {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self.perm = tuple(perm) if perm is not None else None
        if self.perm is not None and sorted(self.perm) != list(range(nvars)):
            raise ValueError("perm must be a permutation of the variable indices")

    def key(self, exps):
        if self.perm is not None:
            exps = tuple(exps[i] for i in self.perm)
        if self.kind == "degrevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "lex":
            return exps
        # elim: last variable is the auxiliary block, eliminated first;
        # degrevlex inside the main block.
        main = exps[:-1]
        return (exps[-1], sum(main), tuple(-e for e in reversed(main)))

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and (self.kind, self.nvars, self.perm) == (other.kind, other.nvars, other.perm)
        )

    def __hash__(self):
        return hash((self.kind, self.nvars, self.perm))

    def __repr__(self):
        return f"TermOrder({self.kind!r}, {self.nvars})"


def degrevlex(nvars: int) -> TermOrder:
    return TermOrder("degrevlex", nvars)


def lex(nvars: int) -> TermOrder:
    return TermOrder("lex", nvars)


# ---------------------------------------------------------------------------
# polynomial ring and polynomials
# ---------------------------------------------------------------------------

class PolyRing:
    """Immutable context: coefficient field, number of variables, term order."""

    def __init__(self, field, nvars: int, order: TermOrder | None = None,
                 var_names: tuple[str, ...] | None = None):
        if not 1 <= nvars <= 11:
            raise ValueError("nvars out of the supported range 1..11 (d <= 9 plus auxiliaries)")
        self.field = field
        self.nvars = nvars
        self.order = order if order is not None else degrevlex(nvars)
        if self.order.nvars != nvars:
            raise ValueError("order arity does not match nvars")
        self.var_names = var_names if var_names is not None else tuple(
            f"x{i}" for i in range(nvars)
        )

    # -- constructors -------------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.field.one})

    def constant(self, c) -> "Poly":
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> "Poly":
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def monomial(self, exps, c=None) -> "Poly":
        c = self.field.one if c is None else c
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {tuple(exps): c})

    def from_terms(self, terms: dict) -> "Poly":
        clean = {tuple(m): c for m, c in terms.items() if not self.field.is_zero(c)}
        return Poly(self, clean)

    # -- derived rings ------------------------------------------------------

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.field, self.nvars, order, self.var_names)

    def with_elim_var(self) -> "PolyRing":
        """Ring with one extra auxiliary variable, eliminated first."""
        return PolyRing(
            self.field,
            self.nvars + 1,
            TermOrder("elim", self.nvars + 1),
            self.var_names + ("t",),
        )

    # -- parsing / printing -------------------------------------------------

    _TOKEN = re.compile(r"\s*(x\d+|\d+/\d+|\d+|\*\*|[-+*^()])")

    def parse(self, text: str) -> "Poly":
        """Parse the polynomial text grammar.

        Variables x0..x9, integer or rational coefficients "a" / "a/b",
        operators + - * ^ (also ** as a synonym), parentheses; whitespace
        insignificant.  Example: "x0^2 + 3/2*x0*x1 - x2^2".
        """
        tokens = []
        pos = 0
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise ValueError(f"bad token at position {pos}: {text[pos:pos + 10]!r}")
            tokens.append("^" if m.group(1) == "**" else m.group(1))
            pos = m.end()
        parser = _PolyParser(self, tokens)
        result = parser.parse_expr()
        if parser.pos != len(tokens):
            raise ValueError(f"trailing input after polynomial: {tokens[parser.pos:]}")
        return result

    def format_poly(self, f: "Poly") -> str:
        if not f.terms:
            return "0"
        field = self.field
        parts = []
        for exps in sorted(f.terms, key=self.order.key, reverse=True):
            c = f.terms[exps]
            mono = "*".join(
                self.var_names[i] if e == 1 else f"{self.var_names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            cs = field.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and (self.field, self.nvars, self.order) == (other.field, other.nvars, other.order)
        )

    def __hash__(self):
        return hash((self.field, self.nvars, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, nvars={self.nvars}, {self.order.kind})"


class _PolyParser:
    """Recursive descent for the additive/multiplicative/power grammar."""

    def __init__(self, ring: PolyRing, tokens: list[str]):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()
            term = self.parse_term()
            acc = acc - term if op == "-" else acc + term
        return acc

    def parse_term(self):
        acc = self.parse_power()
        while self.peek() == "*" or self._starts_factor(self.peek()):
            if self.peek() == "*":
                self.take()
            acc = acc * self.parse_power()
        return acc

    @staticmethod
    def _starts_factor(tok):
        return tok is not None and (tok == "(" or tok[0] == "x" or tok[0].isdigit())

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok is None or not exp_tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(exp_tok)
        return base

    def parse_atom(self):
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        if tok == "(":
            inner = self.parse_expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok == "-":
            return -self.parse_atom()
        if tok.startswith("x"):
            idx = int(tok[1:])
            if idx >= self.ring.nvars:
                raise ValueError(f"variable {tok} out of range for {self.ring.nvars} variables")
            return self.ring.variable(idx)
        if "/" in tok:
            num, den = tok.split("/")
            return self.ring.constant(self.ring.field.from_fraction(Fraction(int(num), int(den))))
        if tok.isdigit():
            return self.ring.constant(self.ring.field.from_int(int(tok)))
        raise ValueError(f"unexpected token {tok!r}")


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class Poly:
    """Sparse polynomial: dict of exponent tuple -> nonzero scalar."""

    __slots__ = ("ring", "terms", "_deg", "_lt")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._deg = -2  # unset marker (-1 means inhomogeneous, None-like)
        self._lt = None

    # degree tag: the common degree when homogeneous, else None
    @property
    def degree(self):
        if self._deg == -2:
            degs = {mono_deg(m) for m in self.terms}
            if not degs:
                self._deg = 0
            elif len(degs) == 1:
                self._deg = degs.pop()
            else:
                self._deg = -1
        return None if self._deg == -1 else self._deg

    def is_homogeneous(self) -> bool:
        return not self.terms or self.degree is not None

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((mono_deg(m) for m in self.terms), default=0)

    def lt(self):
        """Leading (monomial, coefficient) under the ring's order."""
        if self._lt is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self.terms, key=self.ring.order.key)
            self._lt = (m, self.terms[m])
        return self._lt

    def lm(self):
        return self.lt()[0]

    def lc(self):
        return self.lt()[1]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        field = self.ring.field
        inv = field.inv(self.lc())
        return Poly(self.ring, {m: field.mul(inv, c) for m, c in self.terms.items()})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = field.add(res.get(m, field.zero), c)
            if field.is_zero(s):
                res.pop(m, None)
            else:
                res[m] = s
        return Poly(self.ring, res)

    def __sub__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = field.sub(res.get(m, field.zero), c)
            if field.is_zero(s):
                res.pop(m, None)
            else:
                res[m] = s
        return Poly(self.ring, res)

    def __neg__(self) -> "Poly":
        field = self.ring.field
        return Poly(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = field.add(res.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    res.pop(m, None)
                else:
                    res[m] = s
        return Poly(self.ring, res)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        acc = self.ring.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c) -> "Poly":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {m: field.mul(c, x) for m, x in self.terms.items()})

    def term_mul(self, c, exps) -> "Poly":
        """Multiply by the single term c * x^exps."""
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {mono_mul(m, exps): field.mul(c, x) for m, x in self.terms.items()})

    def substitute(self, images: list["Poly"]) -> "Poly":
        """Evaluate at x_i -> images[i] (polynomials over the same field)."""
        target = images[0].ring if images else self.ring
        acc = target.zero()
        for exps, c in self.terms.items():
            part = target.constant(c)
            for i, e in enumerate(exps):
                for _ in range(e):
                    part = part * images[i]
            acc = acc + part
        return acc

    def evaluate(self, point) -> object:
        """Evaluate at a tuple of field scalars."""
        field = self.ring.field
        total = field.zero
        for exps, c in self.terms.items():
            v = c
            for i, e in enumerate(exps):
                for _ in range(e):
                    v = field.mul(v, point[i])
            total = field.add(total, v)
        return total

    # -- misc ---------------------------------------------------------------

    def sort_key(self):
        """Deterministic total order on polynomials (for canonical listings)."""
        okey = self.ring.order.key
        fkey = self.ring.field.sort_key
        return (
            self.total_degree(),
            tuple(sorted(((okey(m), fkey(c)) for m, c in self.terms.items()), reverse=True)),
        )

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return self.ring.format_poly(self)


# ---------------------------------------------------------------------------
# division and Buchberger
# ---------------------------------------------------------------------------

def normal_form(f: Poly, basis: list[Poly]) -> Poly:
    """Remainder of f under full multivariate division by basis."""
    ring = f.ring
    field = ring.field
    divisors = [(g.lm(), g.lc(), g) for g in basis if not g.is_zero()]
    rem: dict = {}
    p = f
    while p.terms:
        m, c = p.lt()
        hit = None
        for lm, lc, g in divisors:
            if mono_divides(lm, m):
                hit = (lm, lc, g)
                break
        if hit is None:
            rem[m] = c
            p = Poly(ring, {k: v for k, v in p.terms.items() if k != m})
        else:
            lm, lc, g = hit
            p = p - g.term_mul(field.div(c, lc), mono_div(m, lm))
    return Poly(ring, rem)


def s_polynomial(f: Poly, g: Poly) -> Poly:
    field = f.ring.field
    lcm = mono_lcm(f.lm(), g.lm())
    a = f.term_mul(field.inv(f.lc()), mono_div(lcm, f.lm()))
    b = g.term_mul(field.inv(g.lc()), mono_div(lcm, g.lm()))
    return a - b


def groebner_basis(gens: list[Poly], *, interreduce: bool = True) -> list[Poly]:
    """Reduced Groebner basis under the generators' ring order.

    Buchberger with the two standard pair-elimination criteria (coprime
    leading terms; chain criterion on processed pairs), normal pair
    selection by increasing lcm.  Deterministic: input is canonically
    sorted first and every choice point is ordered.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    okey = ring.order.key
    G = sorted((g.monic() for g in gens), key=Poly.sort_key)

    def pair_key(i, j):
        lcm = mono_lcm(G[i].lm(), G[j].lm())
        return (mono_deg(lcm), okey(lcm))

    pending: set[tuple[int, int]] = set()
    for j in range(len(G)):
        for i in range(j):
            pending.add((i, j))

    while pending:
        i, j = min(pending, key=lambda p: (pair_key(*p), p))
        pending.discard((i, j))
        fi, fj = G[i], G[j]
        lcm = mono_lcm(fi.lm(), fj.lm())
        # criterion 1: coprime leading monomials -> S-poly reduces to zero
        if lcm == mono_mul(fi.lm(), fj.lm()):
            continue
        # criterion 2 (chain): a third element divides the lcm and both
        # linking pairs were already handled
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k].lm(), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(fi, fj), G)
        if not r.is_zero():
            G.append(r.monic())
            new = len(G) - 1
            for k in range(new):
                pending.add((k, new))

    if interreduce:
        G = reduce_basis(G)
    return G


def reduce_basis(G: list[Poly]) -> list[Poly]:
    """Interreduce a Groebner basis to the unique reduced one (monic, sorted)."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    ring = G[0].ring
    okey = ring.order.key
    # minimalize: drop elements whose leading term another leading term divides
    G = sorted(G, key=lambda g: okey(g.lm()))
    minimal: list[Poly] = []
    for g in G:
        if not any(mono_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    # tail-reduce each against the rest
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = normal_form(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    return sorted(reduced, key=lambda g: okey(g.lm()), reverse=True)


# ---------------------------------------------------------------------------
# homogeneous ideals
# ---------------------------------------------------------------------------

class HomIdeal:
    """Homogeneous ideal with cached reduced Groebner basis and saturation flag.

    saturated is tri-state: True / False / None (unknown).  The zero ideal is
    represented by an empty generator list.
    """

    def __init__(self, ring: PolyRing, gens, saturated: bool | None = None):
        self.ring = ring
        clean = []
        for g in gens:
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            clean.append(g)
        self.gens = tuple(sorted(clean, key=Poly.sort_key))
        self.saturated = saturated
        self._gb: tuple[Poly, ...] | None = None
        self._hilbert_numerator: dict[int, int] | None = None

    @classmethod
    def from_strings(cls, ring: PolyRing, texts, saturated=None) -> "HomIdeal":
        return cls(ring, [ring.parse(t) for t in texts], saturated)

    def groebner(self) -> tuple[Poly, ...]:
        if self._gb is None:
            self._gb = tuple(groebner_basis(list(self.gens)))
        return self._gb

    def with_cached_basis(self) -> "HomIdeal":
        gb = self.groebner()
        out = HomIdeal(self.ring, gb, self.saturated)
        out._gb = gb  # keep the canonical (leading-term sorted) ordering
        return out

    def contains(self, f: Poly) -> bool:
        return normal_form(f, list(self.groebner())).is_zero()

    def is_unit(self) -> bool:
        gb = self.groebner()
        return bool(gb) and gb[0].degree == 0

    def is_zero_ideal(self) -> bool:
        return not self.gens

    def max_gen_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, HomIdeal)
            and self.ring == other.ring
            and self.groebner() == other.groebner()
        )

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"HomIdeal({inside})"


def groebner(I: HomIdeal, order: TermOrder | None = None) -> HomIdeal:
    """I with its reduced basis computed (optionally under another order)."""
    if order is None or order == I.ring.order:
        return I.with_cached_basis()
    ring2 = I.ring.with_order(order)
    gens2 = [Poly(ring2, dict(g.terms)) for g in I.gens]
    return HomIdeal(ring2, gens2, I.saturated).with_cached_basis()


def ideal_equal(I: HomIdeal, J: HomIdeal) -> bool:
    return I == J


def ideal_sum(I: HomIdeal, J: HomIdeal) -> HomIdeal:
    return HomIdeal(I.ring, list(I.gens) + list(J.gens))


def irrelevant_ideal(ring: PolyRing) -> HomIdeal:
    return HomIdeal(ring, [ring.variable(i) for i in range(ring.nvars)], saturated=False)


def unit_ideal(ring: PolyRing) -> HomIdeal:
    return HomIdeal(ring, [ring.one()], saturated=True)


def intersect(I: HomIdeal, J: HomIdeal) -> HomIdeal:
    """I ∩ J by single auxiliary-variable elimination: t·I + (1−t)·J, kill t."""
    ring = I.ring
    if I.is_zero_ideal() or J.is_zero_ideal():
        return HomIdeal(ring, [])
    ering = ring.with_elim_var()

    def lift(f: Poly) -> Poly:
        return Poly(ering, {m + (0,): c for m, c in f.terms.items()})

    t = ering.variable(ring.nvars)
    one_minus_t = ering.one() - t
    gens = [t * lift(f) for f in I.gens] + [one_minus_t * lift(g) for g in J.gens]
    gb = groebner_basis(gens)
    kept = []
    for g in gb:
        if all(m[-1] == 0 for m in g.terms):
            kept.append(Poly(ring, {m[:-1]: c for m, c in g.terms.items()}))
    sat = True if (I.saturated and J.saturated) else None
    return HomIdeal(ring, kept, saturated=sat)


def _quotient_by_poly(I: HomIdeal, g: Poly) -> HomIdeal:
    """(I : g) = (1/g) · (I ∩ (g)) for a single nonzero homogeneous g."""
    ring = I.ring
    if g.degree == 0:
        return HomIdeal(ring, list(I.gens), I.saturated)
    meet = intersect(I, HomIdeal(ring, [g]))
    out = []
    for f in meet.gens:
        q, ok = _divide_exact(f, g)
        if not ok:
            raise AssertionError("intersection element not divisible by the quotient divisor")
        out.append(q)
    return HomIdeal(ring, out)


def _divide_exact(f: Poly, g: Poly):
    """(f / g, True) when g divides f exactly, else (_, False)."""
    ring = f.ring
    field = ring.field
    q: dict = {}
    p = f
    glm, glc = g.lt()
    while p.terms:
        m, c = p.lt()
        if not mono_divides(glm, m):
            return ring.zero(), False
        qm = mono_div(m, glm)
        qc = field.div(c, glc)
        q[qm] = qc
        p = p - g.term_mul(qc, qm)
    return Poly(ring, q), True


def ideal_quotient(I: HomIdeal, J: HomIdeal) -> HomIdeal:
    """(I : J) = {f : f·J ⊆ I}; saturated when I is saturated."""
    ring = I.ring
    if J.is_zero_ideal():
        return unit_ideal(ring)
    parts = [_quotient_by_poly(I, g) for g in J.gens]
    out = _fold(intersect, parts)
    out = HomIdeal(ring, out.gens, saturated=True if I.saturated else None)
    return out


SATURATION_CAP = 50


def saturate(I: HomIdeal, J: HomIdeal | None = None) -> HomIdeal:
    """(I : J^∞) by iterated colon to a fixpoint; J defaults to the irrelevant
    ideal m = (x0..xd).  Iteration cap 50 guards against bugs (noetherianity
    guarantees termination)."""
    ring = I.ring
    if J is None:
        J = irrelevant_ideal(ring)
    mark_saturated = ideal_equal(J, irrelevant_ideal(ring))
    cur = I
    for _ in range(SATURATION_CAP):
        nxt = ideal_quotient(cur, J)
        if ideal_equal(nxt, cur):
            return HomIdeal(ring, cur.gens, saturated=True if mark_saturated else cur.saturated)
        cur = nxt
    raise ResourceCapError(
        f"saturation did not stabilize within {SATURATION_CAP} colon iterations"
    )


# ---------------------------------------------------------------------------
# Hilbert machinery
# ---------------------------------------------------------------------------

def _minimalize_monos(monos):
    monos = sorted(set(monos), key=lambda m: (mono_deg(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(n, m) for n in out):
            out.append(m)
    return out


def _numerator_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def monomial_hilbert_numerator(monos) -> dict[int, int]:
    """Numerator N(u) of the Hilbert series N(u)/(1−u)^nvars of S/(monos).

    Splitting recursion: N(I' + (m)) = N(I') − u^{deg m} · N(I' : m), with a
    pure-power product base case.
    """
    monos = _minimalize_monos(monos)
    if not monos:
        return {0: 1}
    if any(mono_deg(m) == 0 for m in monos):
        return {}
    # base: pairwise coprime generators (includes pure powers)
    coprime = all(
        all(not (a and b) for a, b in zip(monos[i], monos[j]))
        for i in range(len(monos))
        for j in range(i + 1, len(monos))
    )
    if coprime:
        acc = {0: 1}
        for m in monos:
            acc = _numerator_mul(acc, {0: 1, mono_deg(m): -1})
        return acc
    # split on the last (largest) generator
    m = monos[-1]
    rest = monos[:-1]
    colon = _minimalize_monos(
        tuple(max(e - f, 0) for e, f in zip(n, m)) for n in rest
    )
    n_rest = monomial_hilbert_numerator(rest)
    n_colon = monomial_hilbert_numerator(colon)
    out = dict(n_rest)
    dm = mono_deg(m)
    for a, c in n_colon.items():
        out[a + dm] = out.get(a + dm, 0) - c
    return {k: v for k, v in out.items() if v}


def _ideal_numerator(I: HomIdeal) -> dict[int, int]:
    if I._hilbert_numerator is None:
        lt = [g.lm() for g in I.groebner()]
        I._hilbert_numerator = monomial_hilbert_numerator(lt)
    return I._hilbert_numerator


def hilbert_function(I: HomIdeal, n: int) -> int:
    """dim_k (S/I)_n."""
    if n < 0:
        return 0
    nv = I.ring.nvars
    num = _ideal_numerator(I)
    return sum(
        c * math.comb(n - a + nv - 1, nv - 1) for a, c in num.items() if n - a >= 0
    )


@dataclass(frozen=True)
class HilbertPoly:
    """Polynomial in n with exact rational coefficients (index = power of n)."""

    coeffs: tuple[Fraction, ...]

    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def constant_value(self) -> Fraction:
        """The value when the polynomial is constant (degree <= 0)."""
        if self.degree() > 0:
            raise ValueError("Hilbert polynomial is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mono = "" if p == 0 else ("n" if p == 1 else f"n^{p}")
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"HilbertPoly({self.pretty()})"


def _poly_n_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_n_scale(a: tuple, s: Fraction) -> tuple:
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def _poly_n_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _binomial_poly(shift: int, top: int) -> tuple:
    """C(n + shift, top) as a polynomial in n: prod_{i=1..top}(n + shift - top + i)/top!."""
    acc = (Fraction(1),)
    for i in range(1, top + 1):
        acc = _poly_n_mul(acc, (Fraction(shift - top + i), Fraction(1)))
    return _poly_n_scale(acc, Fraction(1, math.factorial(top)))


def hilbert_polynomial_from_numerator(num: dict[int, int], nvars: int) -> HilbertPoly:
    if not num:
        return HilbertPoly(())
    # pull out all (1 - u) factors: N = (1-u)^k * Q with Q(1) != 0
    coeffs = dict(num)
    k = 0
    while sum(coeffs.values()) == 0:
        top = max(coeffs)
        q: dict[int, int] = {}
        run = 0
        for a in range(top):  # N = (1-u)*Q: q_a = n_a + q_{a-1}
            run += coeffs.get(a, 0)
            if run:
                q[a] = run
        coeffs = q if q else {}
        k += 1
        if not coeffs:
            return HilbertPoly(())
    m = nvars - k
    if m <= 0:
        return HilbertPoly(())
    acc: tuple = ()
    for a, c in sorted(coeffs.items()):
        acc = _poly_n_add(acc, _poly_n_scale(_binomial_poly(m - 1 - a, m - 1), Fraction(c)))
    return HilbertPoly(acc)


def hilbert_polynomial(I: HomIdeal) -> HilbertPoly:
    """The eventual polynomial n -> dim (S/I)_n."""
    return hilbert_polynomial_from_numerator(_ideal_numerator(I), I.ring.nvars)


def codimension(I: HomIdeal) -> int:
    """codim of V(I) in P^d, computed as d − deg(Hilbert polynomial).

    The empty subscheme (Hilbert polynomial 0) reports d + 1.
    """
    d = I.ring.nvars - 1
    hp = hilbert_polynomial(I)
    if hp.is_zero():
        return d + 1
    return d - hp.degree()


def dim_full_space(ring: PolyRing, n: int) -> int:
    return math.comb(n + ring.nvars - 1, ring.nvars - 1) if n >= 0 else 0


def dim_ideal_piece(I: HomIdeal, n: int) -> int:
    """dim_k I_n."""
    return dim_full_space(I.ring, n) - hilbert_function(I, n)


def degree_piece_basis(I: HomIdeal, n: int) -> list[Poly]:
    """Row-reduced canonical basis of the degree-n piece of I."""
    from . import linalg  # local import to keep module load order simple

    ring = I.ring
    monos = monomials_of_degree(ring, n)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in I.gens:
        dg = g.degree
        if dg is None or dg > n:
            continue
        for mu in monomials_of_degree(ring, n - dg):
            prod = g.term_mul(ring.field.one, mu)
            row = [ring.field.zero] * len(monos)
            for m, c in prod.terms.items():
                row[col[m]] = c
            rows.append(row)
    reduced, _ = linalg.rref(ring.field, rows)
    out = []
    for row in reduced:
        terms = {monos[i]: c for i, c in enumerate(row) if not ring.field.is_zero(c)}
        out.append(Poly(ring, terms))
    return out


def monomials_of_degree(ring: PolyRing, n: int) -> list[tuple]:
    """All exponent tuples of total degree n, sorted descending in the order."""
    if n < 0:
        return []
    nv = ring.nvars

    def gen(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining, -1, -1):
            yield from gen(prefix + (e,), remaining - e, slots - 1)

    monos = list(gen((), n, nv))
    return sorted(monos, key=ring.order.key, reverse=True)


# ---------------------------------------------------------------------------
# monomial ideal utilities (native primary decomposition)
# ---------------------------------------------------------------------------

def is_monomial_ideal(I: HomIdeal) -> bool:
    return all(len(g.terms) == 1 for g in I.gens)


def monomial_radical(I: HomIdeal) -> HomIdeal:
    """Radical of a monomial ideal: strip exponents to 1."""
    ring = I.ring
    gens = []
    for g in I.gens:
        (m,) = g.terms
        gens.append(ring.monomial(tuple(1 if e else 0 for e in m)))
    return HomIdeal(ring, groebner_basis(gens))


def monomial_primary_decomposition(I: HomIdeal) -> list[tuple[HomIdeal, HomIdeal]]:
    """Primary decomposition of a monomial ideal.

    Returns (component, associated prime) pairs; components are irreducible
    monomial ideals merged per prime, redundant components dropped.  Splitting
    rule: a generator with two coprime factors u·v splits I into
    (I + (u)) ∩ (I + (v)).
    """
    ring = I.ring
    if not is_monomial_ideal(I):
        raise ValueError("native decomposition requires a monomial ideal")
    if I.is_zero_ideal():
        return []

    def split(monos) -> list[tuple]:
        monos = _minimalize_monos(monos)
        for m in monos:
            support = [i for i, e in enumerate(m) if e]
            if len(support) > 1:
                i = support[0]
                u = tuple(e if k == i else 0 for k, e in enumerate(m))
                v = tuple(0 if k == i else e for k, e in enumerate(m))
                rest = [n for n in monos if n != m]
                return split(rest + [u]) + split(rest + [v])
        return [tuple(monos)]

    irreducible = {tuple(sorted(c)) for c in split([g.lm() for g in I.gens])}
    # group by associated prime (the support variables)
    by_prime: dict[tuple, list] = {}
    for comp in irreducible:
        supp = tuple(sorted({i for m in comp for i, e in enumerate(m) if e}))
        by_prime.setdefault(supp, []).append(comp)
    out = []
    for supp in sorted(by_prime):
        comps = [HomIdeal(ring, [ring.monomial(m) for m in comp]) for comp in by_prime[supp]]
        merged = _fold(intersect, comps)
        prime = HomIdeal(ring, [ring.variable(i) for i in supp], saturated=True)
        out.append((merged, prime))
    # drop redundant components (those containing the intersection of the others)
    kept = list(out)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for i in range(len(kept)):
            others = [kept[j][0] for j in range(len(kept)) if j != i]
            meet = _fold(intersect, others)
            if ideal_equal(meet, _fold(intersect, [meet, kept[i][0]])):
                kept.pop(i)
                changed = True
                break
    return kept
