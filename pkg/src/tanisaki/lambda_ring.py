"""Exterior-power and gamma operations on virtual classes of line bundles.

A virtual class here is a formal sum of line-class variables plus an integer
multiple of the trivial class; the splitting rules (the series of a sum is
the product of the series, a line class contributes 1 + u t, a trivial rank
k contributes (1+t)^k with the generalized-binomial extension for k < 0)
then determine every exterior-power coefficient exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import GroebnerBasis, normal_form
from .ideals import to_v_convention
from .partitions import Partition, PartitionError, check_subset, enumerate_subsets
from .polynomial import Polynomial, binomial


@dataclass(frozen=True)
class VirtualClass:
    """sum of [L_i] over a line-index multiset, plus an integer rank shift."""

    n: int
    lines: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        lines = tuple(sorted(int(i) for i in self.lines))
        for i in lines:
            if not 1 <= i <= self.n:
                raise PartitionError(f"line index {i} out of range 1..{self.n}")
        object.__setattr__(self, "lines", lines)

    @property
    def rank(self) -> int:
        """Augmentation of the class: number of lines plus the shift."""
        return len(self.lines) + self.shift

    def shifted(self, delta: int) -> "VirtualClass":
        return VirtualClass(self.n, self.lines, self.shift + delta)

    def as_polynomial(self) -> Polynomial:
        acc = Polynomial.constant(self.n, self.shift)
        for i in self.lines:
            acc = acc + Polynomial.variable(self.n, i)
        return acc


def lambda_series(x: VirtualClass, truncation: int) -> list[Polynomial]:
    """Exterior-power coefficients lambda^0(x) .. lambda^truncation(x).

    The full series is prod_i (1 + u_i t) * (1 + t)^shift; a negative shift
    expands as a power series with generalized binomial coefficients.
    """
    if truncation < 0:
        raise PartitionError(f"truncation must be >= 0, got {truncation}")
    n = x.n
    coeffs = [Polynomial.constant(n, 1)] + [Polynomial.zero(n)] * truncation
    for i in x.lines:
        u = Polynomial.variable(n, i)
        for k in range(truncation, 0, -1):
            coeffs[k] = coeffs[k] + coeffs[k - 1] * u
    if x.shift:
        shifted = []
        for k in range(truncation + 1):
            acc = Polynomial.zero(n)
            for j in range(k + 1):
                w = binomial(x.shift, k - j)
                if w:
                    acc = acc + coeffs[j] * w
            shifted.append(acc)
        coeffs = shifted
    return coeffs


def gamma_op(x: VirtualClass, d: int) -> Polynomial:
    """gamma^d(x), computed as lambda^d(x + d - 1).

    The substitution t -> t/(1-t) expands t^k (1-t)^(-k) with weight
    C(d-1, k-1) at t^d, so gamma^d(x) = sum_k C(d-1, k-1) lambda^k(x); both
    forms are computed and asserted equal on every call.
    """
    if d < 0:
        raise PartitionError(f"gamma index must be >= 0, got {d}")
    if d == 0:
        return Polynomial.constant(x.n, 1)
    via_shift = lambda_series(x.shifted(d - 1), d)[d]
    plain = lambda_series(x, d)
    acc = Polynomial.zero(x.n)
    for k in range(1, d + 1):
        w = binomial(d - 1, k - 1)
        if w:
            acc = acc + plain[k] * w
    if acc != via_shift:
        raise RuntimeError(f"gamma identity failed for {x}, d={d}")
    return via_shift


# -- relation sweeps -----------------------------------------------------


@dataclass(frozen=True)
class RelationReport:
    partition: Partition
    kind: str  # "gamma" | "lambda"
    rows: tuple[tuple[tuple[int, ...], int, bool], ...]  # (subset, d, vanished)
    ok: bool

    def failures(self):
        return [(subset, d) for subset, d, good in self.rows if not good]

    def to_dict(self):
        return {
            "partition": list(self.partition.parts),
            "kind": self.kind,
            "checks": len(self.rows),
            "failures": [{"subset": list(s), "d": d} for s, d in self.failures()],
            "ok": self.ok,
        }


def _sweep(partition: Partition, gb: GroebnerBasis, kind: str, extra: int = 2) -> RelationReport:
    n = partition.n
    dual = partition.dual()
    in_v = gb.source is not None and gb.source.convention == "v"
    rows = []
    ok = True
    for s in range(1, n + 1):
        q = dual.p_function(s)
        for subset in enumerate_subsets(n, s):
            for d in range(s + 1 - q, s + extra + 1):
                if kind == "gamma":
                    poly = gamma_op(VirtualClass(n, subset, -s), d)
                else:
                    poly = lambda_series(VirtualClass(n, subset, -q), d)[d]
                if in_v:
                    poly = to_v_convention(poly)
                vanished = normal_form(poly, gb).is_zero()
                rows.append((subset, d, vanished))
                ok = ok and vanished
    return RelationReport(partition, kind, tuple(rows), ok)


def verify_gamma_relations(partition: Partition, gb: GroebnerBasis) -> RelationReport:
    """gamma^d(sum [L_i] - s) must die in the quotient for every subset and
    every d from s+1-q through s+2 (the overhang exercises the truncation)."""
    return _sweep(partition, gb, "gamma")


def equivalent_lambda_relations(partition: Partition, gb: GroebnerBasis) -> RelationReport:
    """The equivalent exterior-power form lambda^d(sum [L_i] - q) = 0."""
    return _sweep(partition, gb, "lambda")


def gamma_membership(partition: Partition, gb: GroebnerBasis, subset, d: int):
    """One gamma relation: returns (polynomial, normal form, vanished)."""
    n = partition.n
    subset = check_subset(subset, n)
    poly = gamma_op(VirtualClass(n, subset, -len(subset)), d)
    reduced = poly
    if gb.source is not None and gb.source.convention == "v":
        reduced = to_v_convention(poly)
    nf = normal_form(reduced, gb)
    return poly, nf, nf.is_zero()
