"""Independent exact-linear-algebra verification layer.

Everything here works degreewise on explicit spanning vectors and never
consults the Groebner engine, so the two routes can cross-check each other.
Kernels are exact: integer rows with gcd normalization for ranks, unimodular
elimination plus a dense Smith-normal-form residual for torsion checks.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

from .ideals import IdealPresentation, k_tanisaki_generators, tanisaki_generators
from .partitions import Partition
from .polynomial import Polynomial


# -- sparse integer echelon --------------------------------------------


class SparseEchelon:
    """Row echelon over Z (rank over Q) for rows stored as {col: int}."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @staticmethod
    def _normalize(row):
        g = 0
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            for c in row:
                row[c] //= g
        lead = min(row)
        if row[lead] < 0:
            for c in row:
                row[c] = -row[c]
        return row

    def add(self, row) -> int | None:
        """Reduce a row against the echelon; returns its pivot column or None.

        Lead columns are tracked with a lazy heap so elimination chains over
        filled-in rows stay cheap.
        """
        row = {c: v for c, v in row.items() if v}
        heap = list(row)
        heapq.heapify(heap)
        steps = 0
        while heap:
            lead = heapq.heappop(heap)
            if lead not in row:
                continue  # eliminated along the way
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = self._normalize(row)
                return lead
            a, b = piv[lead], row[lead]
            g0 = gcd(a, b)
            ma, mb = a // g0, b // g0
            if ma != 1:
                for c in row:
                    row[c] *= ma
            for c, v in piv.items():
                if c in row:
                    w = row[c] - mb * v
                    if w:
                        row[c] = w
                    else:
                        del row[c]
                else:
                    row[c] = -mb * v
                    heapq.heappush(heap, c)
            steps += 1
            if steps % 16 == 0 and row:
                self._normalize(row)
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_rational(matrix) -> int:
    """Exact rank of a dense matrix with int or Fraction entries."""
    ech = SparseEchelon()
    for dense_row in matrix:
        den = 1
        for v in dense_row:
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        row = {}
        for j, v in enumerate(dense_row):
            w = int(v * den) if isinstance(v, Fraction) else int(v) * den
            if w:
                row[j] = w
        if row:
            ech.add(row)
    return ech.rank


# -- Smith normal form --------------------------------------------------


def smith_normal_form(matrix) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (zeros dropped)."""
    A = [[int(v) for v in row] for row in matrix]
    R = len(A)
    C = len(A[0]) if R else 0
    t = 0
    while True:
        # smallest-magnitude nonzero pivot in the trailing submatrix
        best = None
        for r in range(t, R):
            for c in range(t, C):
                v = A[r][c]
                if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        r0, c0 = best
        A[t], A[r0] = A[r0], A[t]
        if c0 != t:
            for row in A:
                row[t], row[c0] = row[c0], row[t]
        while True:
            # clear the pivot column
            dirty = False
            for r in range(R):
                if r != t and A[r][t]:
                    q = A[r][t] // A[t][t]
                    if q:
                        At = A[t]
                        Ar = A[r]
                        for c in range(t, C):
                            Ar[c] -= q * At[c]
                    if A[r][t]:  # remainder smaller than pivot: promote it
                        A[t], A[r] = A[r], A[t]
                        dirty = True
                        break
            if dirty:
                continue
            # clear the pivot row
            for c in range(C):
                if c != t and A[t][c]:
                    q = A[t][c] // A[t][t]
                    if q:
                        for row in A:
                            row[c] -= q * row[t]
                    if A[t][c]:
                        for row in A:
                            row[t], row[c] = row[c], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for r in range(t + 1, R):
                for c in range(t + 1, C):
                    if A[r][c] % A[t][t]:
                        offender = r
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            Ao = A[offender]
            At = A[t]
            for c in range(C):
                At[c] += Ao[c]
        t += 1
    return [abs(A[i][i]) for i in range(t)]


def _invariant_factors_sparse(rows) -> list[int]:
    """Invariant factors via a unit-pivot sparse phase + dense residual."""
    live = {}
    col_index: dict[int, set[int]] = {}
    for rid, row in enumerate(rows):
        row = {c: v for c, v in row.items() if v}
        if row:
            live[rid] = row
            for c in row:
                col_index.setdefault(c, set()).add(rid)
    ones = 0
    while True:
        pick = None
        for rid in sorted(live):
            row = live[rid]
            units = [c for c, v in row.items() if v in (1, -1)]
            if units and (pick is None or len(row) < len(live[pick[0]])):
                pick = (rid, min(units))
        if pick is None:
            break
        rid, c = pick
        piv = live.pop(rid)
        for col in piv:
            col_index[col].discard(rid)
        s = piv[c]
        for other in sorted(col_index.get(c, ())):
            row = live[other]
            f = row[c] * s  # piv[c] = +-1, so the multiplier is exact
            for col, v in piv.items():
                w = row.get(col, 0) - f * v
                if w:
                    if col not in row:
                        col_index.setdefault(col, set()).add(other)
                    row[col] = w
                else:
                    row.pop(col, None)
                    col_index[col].discard(other)
            if not row:
                del live[other]
        ones += 1
    factors = [1] * ones
    if live:
        cols = sorted({c for row in live.values() for c in row})
        pos = {c: i for i, c in enumerate(cols)}
        dense = []
        for rid in sorted(live):
            drow = [0] * len(cols)
            for c, v in live[rid].items():
                drow[pos[c]] = v
            dense.append(drow)
        factors += smith_normal_form(dense)
    return factors


# -- monomial bookkeeping ------------------------------------------------


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of total degree d, first variable heaviest first."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def dim_graded_piece(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1)


# -- degreewise ideal ranks ----------------------------------------------


def ideal_degree_rank(pres: IdealPresentation, d: int) -> int:
    """Rank of the degree-d slice of a homogeneous ideal, by elimination."""
    n = pres.n
    cols = {m: i for i, m in enumerate(monomials_of_degree(n, d))}
    ech = SparseEchelon()
    for rec in pres.generators:
        poly = rec.poly
        e = poly.degree()
        if e < 0 or e > d:
            continue
        if any(sum(m) != e for m in poly.terms):
            raise ValueError("ideal_degree_rank requires homogeneous generators")
        for m in monomials_of_degree(n, d - e):
            row = {}
            for pm, c in poly.terms.items():
                row[cols[tuple(a + b for a, b in zip(pm, m))]] = int(c)
            ech.add(row)
    return ech.rank


# -- Jordan form and the rank lemma ---------------------------------------


def jordan_matrix(partition: Partition) -> list[list[int]]:
    """Block-diagonal nilpotent matrix with the partition's block sizes."""
    n = partition.n
    mat = [[0] * n for _ in range(n)]
    offset = 0
    for p in partition.parts:
        for i in range(p - 1):
            mat[offset + i][offset + i + 1] = 1
        offset += p
    return mat


def _mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


@dataclass(frozen=True)
class RankLemmaReport:
    partition: Partition
    rows: tuple[tuple[int, int, int], ...]  # (s, p_dual(s), rank of J^(n-s))
    ok: bool

    def to_dict(self):
        return {
            "partition": list(self.partition.parts),
            "rows": [{"s": s, "p_dual": p, "jordan_rank": r} for s, p, r in self.rows],
            "ok": self.ok,
        }


def verify_rank_lemma(partition: Partition) -> RankLemmaReport:
    """Check p_dual(s) == rank(J^(n-s)) for every s in 1..n."""
    n = partition.n
    dual = partition.dual()
    jmat = jordan_matrix(partition)
    power = [[int(i == j) for j in range(n)] for i in range(n)]  # J^0
    ranks = [0] * (n + 1)  # ranks[k] = rank(J^k)
    for k in range(n + 1):
        ranks[k] = rank_rational(power)
        if k < n:
            power = _mat_mul(power, jmat)
    rows = []
    ok = True
    for s in range(1, n + 1):
        p = dual.p_function(s)
        r = ranks[n - s]
        rows.append((s, p, r))
        ok = ok and p == r
    return RankLemmaReport(partition, tuple(rows), ok)


# -- integral freeness -----------------------------------------------------


@dataclass(frozen=True)
class FreenessReport:
    partition: Partition
    degrees: tuple[tuple[int, int, tuple[int, ...]], ...]  # (d, rank, factors != 1)
    ok: bool

    def to_dict(self):
        return {
            "partition": list(self.partition.parts),
            "degrees": [
                {"d": d, "rank": r, "nonunit_factors": list(f)} for d, r, f in self.degrees
            ],
            "ok": self.ok,
        }


def integral_freeness_check(partition: Partition) -> FreenessReport:
    """Degreewise Smith-form check that the cohomology quotient is Z-free."""
    pres = tanisaki_generators(partition)
    n = partition.n
    top = partition.springer_dimension() + 1
    degrees = []
    ok = True
    for d in range(1, top + 1):
        cols = {m: i for i, m in enumerate(monomials_of_degree(n, d))}
        rows = []
        for rec in pres.generators:
            e = rec.poly.degree()
            if not 0 <= e <= d:
                continue
            for m in monomials_of_degree(n, d - e):
                row = {}
                for pm, c in rec.poly.terms.items():
                    row[cols[tuple(a + b for a, b in zip(pm, m))]] = int(c)
                rows.append(row)
        factors = _invariant_factors_sparse(rows)
        bad = tuple(f for f in factors if f != 1)
        degrees.append((d, len(factors), bad))
        ok = ok and not bad
    return FreenessReport(partition, tuple(degrees), ok)


# -- the filtration comparison ---------------------------------------------


@dataclass(frozen=True)
class FiltrationReport:
    partition: Partition
    rows: tuple[tuple[int, int, int, int], ...]  # (d, dim S_d, dim I_d, dim gr_d)
    verdict: bool
    depth_used: int
    escalation_depth: int
    mismatch_degree: int | None = None
    findings: tuple[str, ...] = field(default=())

    def to_dict(self):
        return {
            "partition": list(self.partition.parts),
            "rows": [
                {"d": d, "dim_S": s, "dim_ideal": i, "dim_gr": g}
                for d, s, i, g in self.rows
            ],
            "verdict": "pass" if self.verdict else "fail",
            "ok": self.verdict,
            "depth_used": self.depth_used,
            "escalation_depth": self.escalation_depth,
            "mismatch_degree": self.mismatch_degree,
            "findings": list(self.findings),
        }

    def to_csv_rows(self):
        return [
            [str(self.partition), d, s, i, g, "pass" if i == g else "fail"]
            for d, s, i, g in self.rows
        ]


def _graded_dims_of_products(gens: list[Polynomial], n: int, top: int, depth: int):
    """Leading-form dimensions, per degree, of all truncated generator products.

    Columns are monomials of degree <= top ordered by descending degree, so a
    pivot's block records the exact degree of the leading form it certifies.
    """
    cols = {}
    idx = 0
    for d in range(top, -1, -1):
        for m in monomials_of_degree(n, d):
            cols[m] = idx
            idx += 1
    col_degree = {i: sum(m) for m, i in cols.items()}

    ech = SparseEchelon()
    dims = [0] * (top + 1)
    for size in range(1, depth + 1):
        for combo in itertools.combinations_with_replacement(range(len(gens)), size):
            prod = gens[combo[0]]
            for g in combo[1:]:
                prod = prod * gens[g]
            pd = prod.degree()
            if pd < 0 or pd > top:
                continue
            items = list(prod.terms.items())
            for m in _monomials_up_to(n, top - pd):
                row = {}
                for pm, c in items:
                    row[cols[tuple(a + b for a, b in zip(pm, m))]] = int(c)
                piv = ech.add(row)
                if piv is not None:
                    dims[col_degree[piv]] += 1
    return dims


def _monomials_up_to(n: int, d: int):
    for e in range(d + 1):
        yield from monomials_of_degree(n, e)


def filtration_check(partition: Partition, escalation_depth: int = 2) -> FiltrationReport:
    """Compare the degree filtration of the K-ideal against the graded ideal.

    Per degree d the leading forms of truncated products of K-generators (in
    the v-convention) must span exactly the degree-d slice of the cohomology
    ideal; the cumulative quotient rank must equal the multinomial rank.  On
    a per-degree mismatch the product depth escalates up to escalation_depth
    before the check declares failure.
    """
    n = partition.n
    top = partition.springer_dimension() + 1
    coh = tanisaki_generators(partition)
    ideal_dims = [ideal_degree_rank(coh, d) for d in range(top + 1)]
    s_dims = [dim_graded_piece(n, d) for d in range(top + 1)]

    kgens = [g.poly for g in k_tanisaki_generators(partition, "v").generators]

    findings = []
    depth = 1
    while True:
        gr_dims = _graded_dims_of_products(kgens, n, top, depth)
        mismatch = next((d for d in range(top + 1) if gr_dims[d] != ideal_dims[d]), None)
        if mismatch is None or depth >= escalation_depth:
            break
        findings.append(
            f"degree {mismatch}: gr dimension {gr_dims[mismatch]} != ideal rank "
            f"{ideal_dims[mismatch]} at product depth {depth}; escalating"
        )
        depth += 1

    quotient_total = sum(s_dims[d] - ideal_dims[d] for d in range(top))  # d <= springer dim
    cumulative_ok = (
        quotient_total == partition.multinomial_rank() and ideal_dims[top] == s_dims[top]
    )
    verdict = mismatch is None and cumulative_ok
    if mismatch is None and depth > 1:
        findings.append(f"passed only at escalated product depth {depth}")
    if not cumulative_ok:
        findings.append(
            f"cumulative quotient rank {quotient_total} vs multinomial "
            f"{partition.multinomial_rank()}; top-slice ideal rank {ideal_dims[top]} "
            f"vs {s_dims[top]}"
        )
    rows = tuple((d, s_dims[d], ideal_dims[d], gr_dims[d]) for d in range(top + 1))
    return FiltrationReport(
        partition, rows, verdict, depth, escalation_depth,
        mismatch_degree=mismatch, findings=tuple(findings),
    )
