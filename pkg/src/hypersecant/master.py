"""Signed conjugation sums over pairings: master polynomials and their checks.

The construction works on 4k+2 formal letters I_1, J_1, I_2, J_2, ...
arranged on a circle.  A base pairing matches I_l with J_{l+k-1}; the group
generated by the 2k+1 letter transpositions (I_l, J_{l-1}) acts on pairings
by conjugation, and the master polynomial is the sign-weighted sum of the
monomials of all 2^{2k+1} conjugates, specialized through the assignment
I_l -> i_l, J_l -> j_l of an admissible sequence.  Degenerate assignments
(i_l = j_l for some l) are handled by exactly this formal-letter sum with
coefficient cancellation after specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from .hypersimplex import in_secant_ideal, in_toric_ideal
from .noncrossing import AdmissibleSequence, cycle_monomial
from .order import CircularTermOrder
from .poly import Monomial, Polynomial, partial_derivative

# A letter is ('I', l) or ('J', l) with l in 1..2k+1.
Letter = tuple


def _letters(k: int) -> tuple[Letter, ...]:
    return tuple(("I", l) for l in range(1, 2 * k + 2)) + tuple(
        ("J", l) for l in range(1, 2 * k + 2)
    )


def _position(letter: Letter) -> int:
    # Circular arrangement I_1, J_1, I_2, J_2, ...
    kind, l = letter
    return 2 * (l - 1) + (0 if kind == "I" else 1)


@dataclass(frozen=True)
class PairingInvolution:
    """A fixed-point-free perfect matching on the 4k+2 formal letters."""

    k: int
    pairs: tuple[tuple[Letter, Letter], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"need k >= 1, got {self.k!r}")
        expected = set(_letters(self.k))
        seen: set[Letter] = set()
        for p, q in self.pairs:
            if p == q:
                raise ValueError(f"fixed point at {p}")
            seen.update((p, q))
        if seen != expected or 2 * len(self.pairs) != len(expected):
            raise ValueError("pairs must form a perfect matching on all letters")

    @staticmethod
    def from_pairs(k: int, pairs: Iterable[tuple[Letter, Letter]]) -> "PairingInvolution":
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return PairingInvolution(k, norm)


@dataclass(frozen=True)
class ConjugationSubset:
    """A subset of the 2k+1 conjugating transpositions (I_l, J_{l-1})."""

    k: int
    indices: frozenset

    def __post_init__(self):
        valid = range(1, 2 * self.k + 2)
        if not set(self.indices) <= set(valid):
            raise ValueError(f"indices must lie in 1..{2 * self.k + 1}")

    @property
    def sign(self) -> int:
        return -1 if len(self.indices) % 2 else 1

    def transpositions(self) -> tuple[tuple[Letter, Letter], ...]:
        length = 2 * self.k + 1
        return tuple(
            (("I", l), ("J", (l - 2) % length + 1)) for l in sorted(self.indices)
        )


@dataclass(frozen=True)
class LetterSet:
    """Assignment of concrete indices to the formal letters.

    The assignment may be non-injective: I_l and J_l can share an index for
    a degenerate admissible sequence.
    """

    k: int
    assignment: Mapping[Letter, int]

    def __post_init__(self):
        missing = set(_letters(self.k)) - set(self.assignment)
        if missing:
            raise ValueError(f"assignment misses letters {sorted(missing)}")

    @classmethod
    def from_sequence(cls, s: AdmissibleSequence) -> "LetterSet":
        assign = {}
        for l in range(1, s.length + 1):
            assign[("I", l)] = s.i[l - 1]
            assign[("J", l)] = s.j[l - 1]
        return cls(s.k, assign)


def base_involution(k: int) -> PairingInvolution:
    """Pairs I_l with J_{l+k-1}, indices modulo 2k+1 in 1..2k+1."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"need k >= 1, got {k!r}")
    length = 2 * k + 1
    pairs = [(("I", l), ("J", (l + k - 2) % length + 1)) for l in range(1, length + 1)]
    return PairingInvolution.from_pairs(k, pairs)


def conjugate(inv: PairingInvolution, subset: ConjugationSubset) -> PairingInvolution:
    """Relabel every letter through the selected transpositions and re-pair."""
    if subset.k != inv.k:
        raise ValueError("subset and involution have different k")
    sigma: dict[Letter, Letter] = {}
    for p, q in subset.transpositions():
        sigma[p] = q
        sigma[q] = p
    pairs = [(sigma.get(p, p), sigma.get(q, q)) for p, q in inv.pairs]
    return PairingInvolution.from_pairs(inv.k, pairs)


def involution_monomial(inv: PairingInvolution, letters: LetterSet) -> Monomial:
    """Edge monomial of a pairing under an assignment; exponents accumulate."""
    if letters.k != inv.k:
        raise ValueError("letter set and involution have different k")
    assign = letters.assignment
    edges = []
    for p, q in inv.pairs:
        a, b = assign[p], assign[q]
        if a == b:
            raise ValueError(f"pair ({p}, {q}) is assigned the single index {a}")
        edges.append((min(a, b), max(a, b)))
    return Monomial.from_edges(edges)


def crossing_number(inv: PairingInvolution) -> int:
    """Number of interleaving chord pairs on the circle of 4k+2 letters."""
    chords = [tuple(sorted((_position(p), _position(q)))) for p, q in inv.pairs]
    count = 0
    for x in range(len(chords)):
        a, b = chords[x]
        for y in range(x + 1, len(chords)):
            c, d = chords[y]
            if (a < c < b) != (a < d < b):
                count += 1
    return count


def master_polynomial(s: AdmissibleSequence) -> Polynomial:
    """Sign-weighted conjugation sum attached to an admissible sequence.

    Computed on formal letters, then specialized through the sequence's
    assignment; opposite-signed collisions cancel.  The result is nonzero,
    homogeneous of degree 2k+1, and its coefficients are small ints.
    """
    k = s.k
    letters = LetterSet.from_sequence(s)
    base = base_involution(k)
    acc: dict[Monomial, int] = {}
    indices = range(1, 2 * k + 2)
    for r in range(2 * k + 2):
        sign = -1 if r % 2 else 1
        for chosen in combinations(indices, r):
            inv = conjugate(base, ConjugationSubset(k, frozenset(chosen)))
            m = involution_monomial(inv, letters)
            nc = acc.get(m, 0) + sign
            if nc:
                acc[m] = nc
            else:
                acc.pop(m, None)
    return Polynomial(acc)


def verify_membership(n: int, s: AdmissibleSequence) -> bool:
    """Nonzero and inside the rank-2 vanishing ideal."""
    f = master_polynomial(s)
    return not f.is_zero and in_secant_ideal(n, f)


def verify_prolongation(n: int, f: Polynomial, bound: int) -> bool:
    """All partial derivatives of order 1..bound lie in the toric ideal.

    Vanishing derivatives pass; f itself is not required to be a member.
    When f is multilinear only squarefree derivative multisets are checked,
    since repeated differentiation kills every term; otherwise repeated
    edges are included up to the bound.
    """
    if not f.is_homogeneous:
        raise ValueError("prolongation check requires a homogeneous polynomial")
    if not isinstance(bound, int) or bound < 0:
        raise ValueError(f"need bound >= 0, got {bound!r}")
    if f.is_zero or bound == 0:
        return True
    edges = tuple((v[1], v[2]) for v in f.variables())
    chooser = combinations if f.is_multilinear else combinations_with_replacement
    for size in range(1, bound + 1):
        for multiset in chooser(edges, size):
            d = partial_derivative(f, multiset)
            if d.is_zero:
                continue
            if not in_toric_ideal(n, d):
                return False
    return True


def verify_leading_term(n: int, s: AdmissibleSequence, order: CircularTermOrder) -> bool:
    """The order's leading monomial of the master polynomial is the cycle monomial."""
    f = master_polynomial(s)
    if f.is_zero:
        return False
    return order.leading_monomial(f) == cycle_monomial(s)
