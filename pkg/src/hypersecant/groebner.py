"""Division, S-pair certification, and the candidate bases for both ideals.

The engine verifies rather than completes: the candidate generating sets are
assembled combinatorially (master polynomials, off-diagonal minors, products
of the toric binomials) and Buchberger's criterion plus the combinatorial
initial-ideal match certify them.  All reducers in play have leading
coefficient +-1, so every division stays in integer arithmetic; this is
asserted, not assumed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from typing import Sequence

from .hypersimplex import (
    MonomialIdeal,
    in_secant_ideal,
    in_toric_ideal,
    initial_edge_ideal,
    toric_gb_polynomials,
)
from .noncrossing import (
    admissible_sequences,
    all_admissible_sequences,
    build_graph,
    secant_of_edge_ideal,
    symbolic_square_of_edge_ideal,
)
from .master import master_polynomial
from .order import CircularTermOrder
from .poly import Monomial, Polynomial, format_monomial, format_polynomial

SECANT = "secant"
SYMBOLIC_SQUARE = "symbolic-square"

_EVEN_PERMS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """One certification leg: machine-checked pass/fail, or cited theory."""

    name: str
    status: str  # "pass" | "fail" | "cited"
    witness: object = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"


@dataclass(frozen=True)
class SPairStats:
    count: int = 0
    skipped_coprime: int = 0
    reduced: int = 0
    max_terms: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class GroebnerCertificate:
    """Evidence container: per-leg outcomes plus S-pair statistics."""

    order_descriptor: dict
    generator_count: int
    checks: tuple[CheckResult, ...]
    n: int | None = None
    kind: str | None = None
    spair_stats: SPairStats | None = None

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.failed)


# ---------------------------------------------------------------------------
# division and S-pairs
# ---------------------------------------------------------------------------

def _reducer_data(G: Sequence[Polynomial], order: CircularTermOrder):
    """Precompute (terms, lt, lt coeff, lt var mask, squarefree flag) per reducer."""
    varbit: dict = {}
    data = []
    for g in G:
        if g.is_zero:
            raise ValueError("reducers must be nonzero")
        ltm, ltc = order.leading_term(g)
        if ltc not in (1, -1):
            raise ValueError(f"reducer has non-unit leading coefficient {ltc}")
        mask = 0
        for v, _ in ltm.factors:
            b = varbit.get(v)
            if b is None:
                b = 1 << len(varbit)
                varbit[v] = b
            mask |= b
        data.append((dict(g.terms()), ltm, ltc, mask, ltm.is_squarefree))
    return data, varbit


def _mask_factory(varbit: dict):
    memo: dict[Monomial, int] = {}

    def mask_of(m: Monomial) -> int:
        r = memo.get(m)
        if r is None:
            r = 0
            for v, _ in m.factors:
                b = varbit.get(v)
                if b is not None:
                    r |= b
            memo[m] = r
        return r

    return mask_of


def _reduce_terms(work: dict, data, key, mask_of) -> tuple[dict, int]:
    """Full normal form of the term dict `work`; returns (remainder, max size).

    Reducer choice is deterministic: the largest reducible term is rewritten
    by the first reducer in list order whose leading term divides it.
    """
    result: dict[Monomial, int] = {}
    max_terms = len(work)
    while work:
        m = max(work, key=key)
        mmask = mask_of(m)
        hit = None
        for gterms, ltm, ltc, ltmask, sfree in data:
            if ltmask & ~mmask:
                continue
            if sfree or ltm.divides(m):
                hit = (gterms, ltm, ltc)
                break
        if hit is None:
            result[m] = work.pop(m)
            continue
        gterms, ltm, ltc = hit
        scale = work[m] * ltc
        cof = m.divide_by(ltm)
        if cof.is_one:
            for gm, gc in gterms.items():
                nc = work.get(gm, 0) - scale * gc
                if nc:
                    work[gm] = nc
                else:
                    work.pop(gm, None)
        else:
            for gm, gc in gterms.items():
                mm = gm.mul(cof)
                nc = work.get(mm, 0) - scale * gc
                if nc:
                    work[mm] = nc
                else:
                    work.pop(mm, None)
        size = len(work) + len(result)
        if size > max_terms:
            max_terms = size
    return result, max_terms


def reduce(f: Polynomial, G: Sequence[Polynomial], order: CircularTermOrder) -> Polynomial:
    """Normal form of f modulo G: no remainder term divisible by any LT(g)."""
    data, varbit = _reducer_data(G, order)
    rem, _ = _reduce_terms(dict(f.terms()), data, order.key, _mask_factory(varbit))
    return Polynomial(rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: CircularTermOrder) -> Polynomial:
    """The lcm-cancellation combination with both leading terms eliminated."""
    ltf, cf = order.leading_term(f)
    ltg, cg = order.leading_term(g)
    if cf not in (1, -1) or cg not in (1, -1):
        raise ValueError("s_polynomial requires unit leading coefficients")
    lcm = ltf.lcm(ltg)
    left = f * Polynomial.from_monomial(lcm.divide_by(ltf), cf)
    right = g * Polynomial.from_monomial(lcm.divide_by(ltg), cg)
    return left - right


def _verify_pair_range(pairs, data, key, mask_of):
    """Reduce the S-polynomial of each listed pair; collect failures."""
    failures = []
    skipped = reduced = max_terms = 0
    for i, j in pairs:
        terms_i, lti, ci, maski, _ = data[i]
        terms_j, ltj, cj, maskj, _ = data[j]
        if maski & maskj == 0:
            skipped += 1  # coprime leading terms always reduce to zero
            continue
        lcm = lti.lcm(ltj)
        work: dict[Monomial, int] = {}
        cof_i = lcm.divide_by(lti)
        cof_j = lcm.divide_by(ltj)
        for gm, gc in terms_i.items():
            mm = gm.mul(cof_i)
            nc = work.get(mm, 0) + ci * gc
            if nc:
                work[mm] = nc
            else:
                work.pop(mm, None)
        for gm, gc in terms_j.items():
            mm = gm.mul(cof_j)
            nc = work.get(mm, 0) - cj * gc
            if nc:
                work[mm] = nc
            else:
                work.pop(mm, None)
        reduced += 1
        rem, mt = _reduce_terms(work, data, key, mask_of)
        if mt > max_terms:
            max_terms = mt
        if rem:
            failures.append(
                {
                    "pair": [i, j],
                    "remainder_terms": len(rem),
                    "remainder": format_polynomial(Polynomial(rem)),
                }
            )
    return failures, skipped, reduced, max_terms


_WORKER_CTX: dict = {}


def _worker_init(gen_terms, n, inner):
    order = CircularTermOrder(n, inner)
    G = [Polynomial((Monomial(f), c) for f, c in terms) for terms in gen_terms]
    data, varbit = _reducer_data(G, order)
    _WORKER_CTX["data"] = data
    _WORKER_CTX["key"] = order.key
    _WORKER_CTX["mask_of"] = _mask_factory(varbit)


def _worker_chunk(pairs):
    return _verify_pair_range(
        pairs, _WORKER_CTX["data"], _WORKER_CTX["key"], _WORKER_CTX["mask_of"]
    )


def buchberger_verify(
    G: Sequence[Polynomial],
    order: CircularTermOrder,
    n: int | None = None,
    kind: str | None = None,
    threads: int = 1,
) -> GroebnerCertificate:
    """Certify that every S-pair of G reduces to zero modulo G.

    Pairs with coprime leading terms are skipped (they reduce to zero by the
    product criterion) and counted in the statistics.  Failures carry the
    offending pair and its nonzero remainder as a witness.  With threads > 1
    the pair list is partitioned over a process pool; aggregation order is
    fixed, so the certificate is identical to the serial one.
    """
    G = list(G)
    data, varbit = _reducer_data(G, order)
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    started = time.perf_counter()
    results = []
    if threads > 1 and len(pairs) > 64:
        try:
            import multiprocessing as mp

            gen_terms = [[(m.factors, c) for m, c in g.terms()] for g in G]
            chunk_count = max(threads * 4, 1)
            step = max(1, -(-len(pairs) // chunk_count))
            chunks = [pairs[a : a + step] for a in range(0, len(pairs), step)]
            ctx = mp.get_context("fork")
            with ctx.Pool(
                processes=threads,
                initializer=_worker_init,
                initargs=(gen_terms, order.n, order.inner),
            ) as pool:
                results = pool.map(_worker_chunk, chunks)
        except (ImportError, OSError):
            results = []
    if not results:
        results = [_verify_pair_range(pairs, data, order.key, _mask_factory(varbit))]
    failures: list = []
    skipped = reduced = max_terms = 0
    for fl, sk, rd, mt in results:
        failures.extend(fl)
        skipped += sk
        reduced += rd
        max_terms = max(max_terms, mt)
    stats = SPairStats(
        count=len(pairs),
        skipped_coprime=skipped,
        reduced=reduced,
        max_terms=max_terms,
        wall_time=time.perf_counter() - started,
    )
    check = CheckResult(
        "spairs_reduce_to_zero",
        "pass" if not failures else "fail",
        None if not failures else failures,
    )
    return GroebnerCertificate(
        order_descriptor=order.descriptor(),
        generator_count=len(G),
        checks=(check,),
        n=n,
        kind=kind,
        spair_stats=stats,
    )


# ---------------------------------------------------------------------------
# candidate bases
# ---------------------------------------------------------------------------

def off_diagonal_minor(rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """3x3 minor of the symmetric variable matrix on disjoint row/column sets.

    Signs are normalized so the antidiagonal term
    x[r1,c3]*x[r2,c2]*x[r3,c1] has coefficient +1.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != 3 or len(cols) != 3:
        raise ValueError("need exactly three row and three column indices")
    if len(set(rows) | set(cols)) != 6:
        raise ValueError("row and column indices must be six distinct vertices")
    if any(not isinstance(v, int) or v < 1 for v in rows + cols):
        raise ValueError("indices must be positive ints")
    acc: dict[Monomial, int] = {}
    for perm in permutations(range(3)):
        sign = 1 if perm in _EVEN_PERMS else -1
        m = Monomial.from_edges((rows[a], cols[perm[a]]) for a in range(3))
        acc[m] = acc.get(m, 0) + sign
    anti = antidiagonal_monomial(rows, cols)
    if acc[anti] < 0:
        acc = {m: -c for m, c in acc.items()}
    return Polynomial(acc)


def antidiagonal_monomial(rows: Sequence[int], cols: Sequence[int]) -> Monomial:
    return Monomial.from_edges((r, c) for r, c in zip(rows, reversed(tuple(cols))))


def off_diagonal_minor_3x3(indices: Sequence[int]) -> Polynomial:
    """Minor on six increasing vertices split as rows 1..3, columns 4..6."""
    idx = tuple(indices)
    if len(idx) != 6 or any(idx[a] >= idx[a + 1] for a in range(5)):
        raise ValueError("need six distinct strictly increasing vertex indices")
    return off_diagonal_minor(idx[:3], idx[3:])


def circular_minor_splits(subset: Sequence[int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The three splits of a 6-subset into circularly consecutive row/column arcs.

    Starting the circular reading of the sorted subset at positions 0, 1, 2
    yields all distinct arc splits (starts 3..5 transpose the first three).
    The antidiagonals of these splits are exactly the circularly nested
    triples on the subset.
    """
    sub = tuple(sorted(subset))
    if len(sub) != 6 or len(set(sub)) != 6:
        raise ValueError("need six distinct vertex indices")
    out = []
    for start in range(3):
        c = sub[start:] + sub[:start]
        out.append((c[:3], c[3:]))
    return out


def nested_triple_monomials(n: int) -> list[Monomial]:
    """The circularly nested noncrossing triples, one family per 6-subset split."""
    out = []
    for sub in combinations(range(1, n + 1), 6):
        for rows, cols in circular_minor_splits(sub):
            out.append(antidiagonal_monomial(rows, cols))
    return out


def secant_gb(n: int) -> list[Polynomial]:
    """Candidate basis for the rank-2 vanishing ideal: masters plus minors.

    Master polynomials come from every canonical admissible sequence; the
    minors cover each 6-subset in all three circularly consecutive splits,
    whose antidiagonal leading terms are the nested noncrossing triples.
    """
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"need n >= 4, got {n!r}")
    out = [master_polynomial(s) for s in all_admissible_sequences(n)]
    for sub in combinations(range(1, n + 1), 6):
        for rows, cols in circular_minor_splits(sub):
            out.append(off_diagonal_minor(rows, cols))
    return out


def _symbolic_components(n: int):
    minors = []
    for sub in combinations(range(1, n + 1), 6):
        for rows, cols in circular_minor_splits(sub):
            minors.append(off_diagonal_minor(rows, cols))
    masters = [master_polynomial(s) for s in admissible_sequences(n, 1)] if n >= 5 else []
    toric = toric_gb_polynomials(n)
    products = [(a, b, toric[a] * toric[b]) for a, b in combinations_with_replacement(range(len(toric)), 2)]
    return minors, masters, toric, products


def symbolic_square_gb(n: int) -> list[Polynomial]:
    """Candidate basis for the symbolic square: minors, degree-3 masters, and
    products of pairs of the quadratic toric binomials."""
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"need n >= 4, got {n!r}")
    minors, masters, _, products = _symbolic_components(n)
    return minors + masters + [p for _, _, p in products]


def symbolic_square_identity_holds(n: int) -> bool:
    """Monomial-ideal identity: the symbolic square of the initial ideal equals
    its ordinary square plus the secant of the initial ideal."""
    g = build_graph(n)
    max_len = n if n % 2 else n - 1
    square_gens = [
        a.mul(b)
        for a, b in combinations_with_replacement(initial_edge_ideal(n).generators, 2)
    ]
    union = list(square_gens)
    union.extend(secant_of_edge_ideal(g, max_len).generators)
    return MonomialIdeal(union) == symbolic_square_of_edge_ideal(g)


# ---------------------------------------------------------------------------
# the certification pipeline
# ---------------------------------------------------------------------------

def _normalize_kind(kind: str) -> str:
    if kind in (SECANT,):
        return SECANT
    if kind in (SYMBOLIC_SQUARE, "symbolic", "symbolic_square"):
        return SYMBOLIC_SQUARE
    raise ValueError(f"kind must be 'secant' or 'symbolic-square', got {kind!r}")


def delightful_check(
    n: int,
    kind: str,
    order: CircularTermOrder,
    with_buchberger: bool = False,
    threads: int = 1,
) -> GroebnerCertificate:
    """Full certification that the candidate basis cuts out the right ideal.

    Legs: (a) every candidate generator passes the exact membership oracle
    for its ideal; (b) the minimal generators of the leading-term ideal
    coincide with the combinatorial target; (c) optionally, every S-pair
    reduces to zero.  Together with the cited containment of the initial
    ideal of a secant in the secant of the initial ideal, (a)+(b) force the
    initial ideals to agree, so the candidates form a Groebner basis.
    """
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"need n >= 4, got {n!r}")
    kind = _normalize_kind(kind)
    checks: list[CheckResult] = []
    graph = build_graph(n)
    max_len = n if n % 2 else n - 1

    if kind == SECANT:
        gens = secant_gb(n)
        bad = [
            {"index": gi, "generator": format_polynomial(g, order.key)}
            for gi, g in enumerate(gens)
            if not in_secant_ideal(n, g)
        ]
        checks.append(
            CheckResult("generators_vanish_on_rank_two_locus", "fail" if bad else "pass", bad or None)
        )
        target = secant_of_edge_ideal(graph, max_len)
    else:
        minors, masters, toric, products = _symbolic_components(n)
        gens = minors + masters + [p for _, _, p in products]
        bad = []
        for gi, g in enumerate(minors + masters):
            if not in_secant_ideal(n, g):
                bad.append({"index": gi, "reason": "rank-2 oracle failed"})
        factor_ok = [in_toric_ideal(n, t) for t in toric]
        for offset, (a, b, _) in enumerate(products):
            if not (factor_ok[a] and factor_ok[b]):
                bad.append(
                    {"index": len(minors) + len(masters) + offset, "reason": "factor outside toric ideal"}
                )
        checks.append(
            CheckResult("generators_member_of_symbolic_square", "fail" if bad else "pass", bad or None)
        )
        target = symbolic_square_of_edge_ideal(graph)

    lt_ideal = MonomialIdeal(order.leading_monomial(g) for g in gens)
    if lt_ideal == target:
        checks.append(CheckResult("initial_ideal_matches_combinatorial_target", "pass"))
    else:
        got = set(lt_ideal.generators)
        want = set(target.generators)
        witness = {
            "missing": sorted(format_monomial(m) for m in want - got),
            "unexpected": sorted(format_monomial(m) for m in got - want),
        }
        checks.append(CheckResult("initial_ideal_matches_combinatorial_target", "fail", witness))

    checks.append(CheckResult("initial_of_secant_inside_secant_of_initial", "cited"))
    if kind == SYMBOLIC_SQUARE:
        checks.append(CheckResult("square_plus_secant_inside_symbolic_square", "cited"))

    stats = None
    if with_buchberger:
        sub = buchberger_verify(gens, order, n=n, kind=kind, threads=threads)
        checks.extend(sub.checks)
        stats = sub.spair_stats

    return GroebnerCertificate(
        order_descriptor=order.descriptor(),
        generator_count=len(gens),
        checks=tuple(checks),
        n=n,
        kind=kind,
        spair_stats=stats,
    )
