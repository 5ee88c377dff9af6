"""Tanisaki ideal and K-theoretic Tanisaki ideal generator construction.

Both ideals are produced as explicit generator lists with provenance: which
(subset, d, q) triple produced each polynomial.  The cohomology flavor lives
in Z[y_1..y_n], the K-theory flavor in Z[u_1..u_n] or, after the unit shift
v_j = u_j - 1, in Z[v_1..v_n].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .partitions import Partition, PartitionError, check_subset, enumerate_subsets
from .polynomial import Polynomial, binomial, elementary_symmetric

SCHEMA_VERSION = 1

COHOMOLOGY = "cohomology"
KTHEORY = "ktheory"


@dataclass(frozen=True)
class GeneratorRecord:
    poly: Polynomial
    subset: tuple[int, ...]
    d: int
    q: int
    flavor: str


@dataclass(frozen=True)
class IdealPresentation:
    partition: Partition
    flavor: str
    convention: str  # "y" | "u" | "v"
    generators: tuple[GeneratorRecord, ...]

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def dual(self) -> Partition:
        return self.partition.dual()

    def polynomials(self) -> list[Polynomial]:
        return [g.poly for g in self.generators]


def to_v_convention(p: Polynomial) -> Polynomial:
    """Rewrite a u-variable polynomial in v-variables, v_j = u_j - 1."""
    return p.shift_variables(1)


def to_u_convention(p: Polynomial) -> Polynomial:
    """Inverse of to_v_convention."""
    return p.shift_variables(-1)


def _d_range(s: int, q: int) -> range:
    """Degrees kept for a size-s subset with q = p_dual(s): max(1, s+1-q)..s."""
    return range(max(1, s + 1 - q), s + 1)


def tanisaki_generators(partition: Partition) -> IdealPresentation:
    """Cohomology-flavor generators e_d(y-subset) for d >= s + 1 - p_dual(s).

    Generators with d > s are identically zero and omitted; the d-range is
    bounded above by s, which loses nothing for homogeneous generators.
    """
    n = partition.n
    dual = partition.dual()
    records = []
    seen = set()
    for s in range(1, n + 1):
        q = dual.p_function(s)
        for subset in enumerate_subsets(n, s):
            for d in _d_range(s, q):
                poly = elementary_symmetric(n, d, subset)
                if poly in seen:
                    continue
                seen.add(poly)
                records.append(GeneratorRecord(poly, subset, d, q, COHOMOLOGY))
    return IdealPresentation(partition, COHOMOLOGY, "y", tuple(records))


def h_polynomial(subset, d: int, q: int, n: int) -> Polynomial:
    """The degree-d K-relation for a subset with q trivial summands.

    h_d = sum_{0<=k<=d} (-1)^(d-k) * e_k(u-subset) * C(q+d-k-1, q-1), the
    t^d coefficient of prod(1 + u_i t) * (1+t)^(-q).  Its top graded piece
    is e_d(subset) and its augmentation vanishes whenever d >= s+1-q.
    """
    subset = check_subset(subset, n)
    if d < 1:
        raise PartitionError(f"h polynomial degree must be >= 1, got {d}")
    if q < 0:
        raise PartitionError(f"q must be >= 0, got {q}")
    if q == 0:
        # (1+t)^0 contributes nothing: plain elementary symmetric
        return elementary_symmetric(n, d, subset)
    acc = Polynomial.zero(n)
    for k in range(d + 1):
        w = binomial(q + d - k - 1, q - 1)
        if w == 0:
            continue
        term = elementary_symmetric(n, k, subset) * w
        acc = acc + (term if (d - k) % 2 == 0 else -term)
    return acc


def k_tanisaki_generators(partition: Partition, convention: str = "u") -> IdealPresentation:
    """K-theory-flavor generators h_d(u-subset) over the same (s, subset, d) grid."""
    if convention not in ("u", "v"):
        raise PartitionError(f"convention must be 'u' or 'v', got {convention!r}")
    n = partition.n
    dual = partition.dual()
    records = []
    seen = set()
    for s in range(1, n + 1):
        q = dual.p_function(s)
        for subset in enumerate_subsets(n, s):
            for d in _d_range(s, q):
                poly = h_polynomial(subset, d, q, n)
                if convention == "v":
                    poly = to_v_convention(poly)
                if poly in seen:
                    continue
                seen.add(poly)
                records.append(GeneratorRecord(poly, subset, d, q, KTHEORY))
    return IdealPresentation(partition, KTHEORY, convention, tuple(records))


def truncation_certificate(partition: Partition, subset) -> list[dict]:
    """Express h_{s+1} and h_{s+2} as integer combinations of the kept h_d.

    The coefficient of t^m in prod(1 + u_i t) is e_m(subset), which vanishes
    for m > s; multiplying the defining series by (1+t)^q therefore yields
    sum_{k=0..q} C(q, k) h_{m-k} = 0 for m > s, so the out-of-range relations
    cascade back into the kept window [s+1-q, s].
    """
    n = partition.n
    subset = check_subset(subset, n)
    s = len(subset)
    q = partition.dual().p_function(s)
    kept = {d: h_polynomial(subset, d, q, n) for d in _d_range(s, q)}

    # combos[m]: dict d -> integer coefficient over the kept window
    combos: dict[int, dict[int, int]] = {d: {d: 1} for d in kept}
    out = []
    for m in (s + 1, s + 2):
        if q == 0:
            # series is the bare product, h_m = e_m = 0 identically
            out.append({"m": m, "h": Polynomial.zero(n), "combination": {}})
            combos[m] = {}
            continue
        combo: dict[int, int] = {}
        for k in range(1, q + 1):
            lower = m - k
            if lower < max(1, s + 1 - q):
                continue  # e_0-like tail: h_{<=0} never occurs since q <= s
            for d, c in combos[lower].items():
                combo[d] = combo.get(d, 0) - comb(q, k) * c
        combo = {d: c for d, c in combo.items() if c}
        combos[m] = combo
        h = Polynomial.zero(n)
        for d, c in combo.items():
            h = h + kept[d] * c
        if h != h_polynomial(subset, m, q, n):
            raise RuntimeError(
                f"truncation recurrence failed for subset {subset}, m={m}"
            )
        out.append({"m": m, "h": h, "combination": combo})
    return out


def apply_permutation(p: Polynomial, sigma) -> Polynomial:
    """Variable substitution x_j -> x_{sigma(j)} for a 1-based permutation."""
    return p.permute_variables(sigma)


# -- serialization ----------------------------------------------------


def presentation_to_dict(pres: IdealPresentation) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "partition": list(pres.partition.parts),
        "n": pres.n,
        "flavor": pres.flavor,
        "convention": pres.convention,
        "generators": [
            {
                "subset": list(g.subset),
                "d": g.d,
                "q": g.q,
                "poly": g.poly.render(pres.convention),
            }
            for g in pres.generators
        ],
    }


def presentation_from_dict(doc: dict) -> IdealPresentation:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise PartitionError(f"unsupported schema_version {doc.get('schema_version')!r}")
    partition = Partition(tuple(doc["partition"]))
    n = partition.n
    if doc["n"] != n:
        raise PartitionError(f"inconsistent n: {doc['n']} vs partition sum {n}")
    convention = doc["convention"]
    records = tuple(
        GeneratorRecord(
            Polynomial.parse(g["poly"], n, convention),
            tuple(g["subset"]),
            g["d"],
            g["q"],
            doc["flavor"],
        )
        for g in doc["generators"]
    )
    return IdealPresentation(partition, doc["flavor"], convention, records)


def presentation_json(pres: IdealPresentation) -> str:
    return json.dumps(presentation_to_dict(pres), sort_keys=True, indent=2)
