"""The toric ideal of the second hypersimplex and its exact membership oracles.

The ideal is the kernel of x[a,b] -> t_a*t_b.  Its reduced Groebner basis
under any circular order consists of one quadratic binomial pair per
4-subset, exchanging a noncrossing pair of chords for the crossing pair.
Membership in the ideal and in its secant is decided by the parametric
substitution identities, which are independent of any term order and of the
Groebner machinery they certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .poly import Monomial, Polynomial, substitute_rank


def normalize_edge(n: int, e: tuple[int, int]) -> tuple[int, int]:
    a, b = e
    if a > b:
        a, b = b, a
    if a < 1 or b > n or a == b:
        raise ValueError(f"edge ({e[0]},{e[1]}) is not valid for n={n}")
    return (a, b)


def crosses(n: int, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Whether two chords of the circular drawing intersect.

    Chords sharing an endpoint count as crossing; four distinct endpoints
    cross exactly when they interleave around the circle.
    """
    a, b = normalize_edge(n, e)
    c, d = normalize_edge(n, f)
    if len({a, b, c, d}) < 4:
        return True
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class BinomialGenerator:
    """A generator lead - trail of the toric ideal, lead the noncrossing pair."""

    lead: Monomial
    trail: Monomial
    quadruple: tuple[int, int, int, int]
    family: int  # 1: (ij)(kl) lead, 2: (il)(jk) lead

    def polynomial(self) -> Polynomial:
        return Polynomial(((self.lead, 1), (self.trail, -1)))


def toric_gb(n: int) -> list[BinomialGenerator]:
    """The quadratic binomials, two per 4-subset, in (i,j,k,l)-then-family order."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"need n >= 3, got {n!r}")
    out = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        trail = Monomial.from_edges([(i, k), (j, l)])
        out.append(BinomialGenerator(Monomial.from_edges([(i, j), (k, l)]), trail, (i, j, k, l), 1))
        out.append(BinomialGenerator(Monomial.from_edges([(i, l), (j, k)]), trail, (i, j, k, l), 2))
    return out


def toric_gb_polynomials(n: int) -> list[Polynomial]:
    return [g.polynomial() for g in toric_gb(n)]


class MonomialIdeal:
    """A monomial ideal held by its inclusion-minimal generating set.

    Membership and equality queries reduce to divisibility against the
    minimal generators, which are computed once at construction.
    """

    __slots__ = ("generators", "_varbits", "_gen_data")

    def __init__(self, generators: Iterable[Monomial] = ()):
        gens = sorted(set(generators), key=lambda m: (m.degree, m.factors))
        varbits: dict = {}
        for m in gens:
            for v, _ in m.factors:
                if v not in varbits:
                    varbits[v] = 1 << len(varbits)

        def mask(m: Monomial) -> int:
            b = 0
            for v, _ in m.factors:
                b |= varbits[v]
            return b

        kept: list[Monomial] = []
        kept_data: list[tuple[int, Monomial]] = []
        for m in gens:
            mm = mask(m)
            # Generators arrive degree-sorted, so only strictly smaller kept
            # generators can strictly divide; equal monomials were deduped.
            if any(km & ~mm == 0 and kg.divides(m) for km, kg in kept_data):
                continue
            kept.append(m)
            kept_data.append((mm, m))
        self.generators = tuple(kept)
        self._varbits = varbits
        self._gen_data = tuple(kept_data)

    @property
    def is_empty(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def contains(self, m: Monomial) -> bool:
        """True iff some minimal generator divides m."""
        bits = self._varbits
        mm = 0
        for v, _ in m.factors:
            b = bits.get(v)
            if b is not None:
                mm |= b
        return any(km & ~mm == 0 and kg.divides(m) for km, kg in self._gen_data)

    __contains__ = contains

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({m.degree for m in self.generators}))

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({len(self.generators)} minimal generators)"


def initial_edge_ideal(n: int) -> MonomialIdeal:
    """The ideal of all noncrossing chord pairs, i.e. the toric initial ideal."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"need n >= 3, got {n!r}")
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    gens = []
    for e, f in combinations(edges, 2):
        if not crosses(n, e, f):
            gens.append(Monomial.from_edges([e, f]))
    return MonomialIdeal(gens)


def _validate_ambient(n: int, p: Polynomial) -> None:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"need n >= 3, got {n!r}")
    if not p.uses_only_edge_vars():
        raise ValueError("expected a polynomial in edge variables only")
    for v in p.variables():
        if v[2] > n:
            raise ValueError(f"variable {v!r} is out of range for n={n}")


def in_toric_ideal(n: int, p: Polynomial) -> bool:
    """Exact membership in the kernel of x[a,b] -> t_a*t_b."""
    _validate_ambient(n, p)
    return substitute_rank(p, 1).is_zero


def in_secant_ideal(n: int, p: Polynomial) -> bool:
    """Exact membership in the rank-2 vanishing ideal, for homogeneous p."""
    _validate_ambient(n, p)
    if not p.is_homogeneous:
        raise ValueError("secant membership oracle requires a homogeneous polynomial")
    return substitute_rank(p, 2).is_zero
