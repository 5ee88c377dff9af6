"""Buchberger Groebner-basis engine over exact rationals.

Completion runs on primitive integer polynomials (gcd-normalized pseudo
reduction), so no Fraction ever enters the hot loop; the finished basis is
converted to the unique reduced monic form.  Both classic Buchberger
criteria are applied and the pair queue uses the normal (lowest lcm degree
first) strategy with monomial-order tie-breaks, so completion is
deterministic for a fixed input and order.
"""

from __future__ import annotations

import hashlib
import heapq
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from operator import add, sub

from .ideals import IdealPresentation, presentation_json
from .polynomial import Polynomial


class GroebnerError(ValueError):
    pass


class InfiniteQuotient(GroebnerError):
    """The staircase has an infinite ray: the quotient is not finite rank."""


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative total order on monomials with 1 minimal."""

    kind: str = "degrevlex"
    priority: tuple[int, ...] | None = None  # 1-based variable priority

    def __post_init__(self):
        if self.kind not in ("degrevlex", "deglex", "lex"):
            raise GroebnerError(f"unknown monomial order {self.kind!r}")
        if self.priority is not None:
            object.__setattr__(self, "priority", tuple(self.priority))

    def key(self, exps):
        e = exps if self.priority is None else tuple(exps[j - 1] for j in self.priority)
        if self.kind == "lex":
            return e
        if self.kind == "deglex":
            return (sum(e), e)
        return (sum(e), tuple(-x for x in reversed(e)))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority) if self.priority else None}

    @classmethod
    def from_dict(cls, doc: dict) -> "MonomialOrder":
        prio = doc.get("priority")
        return cls(doc["kind"], tuple(prio) if prio else None)


DEGREVLEX = MonomialOrder("degrevlex")
DEGLEX = MonomialOrder("deglex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[Polynomial, ...]  # monic, auto-reduced, sorted by leading monomial
    order: MonomialOrder
    source: IdealPresentation | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.polys[0].n if self.polys else 0

    def leading_monomials(self) -> list[tuple[int, ...]]:
        key = self.order.key
        return [max(p.terms, key=key) for p in self.polys]

    def __len__(self):
        return len(self.polys)


# -- integer kernel ----------------------------------------------------


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _primitive(terms, lm):
    """Divide by the content and make the leading coefficient positive."""
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g == 0:
        return terms
    if terms[lm] < 0:
        g = -g
    if g != 1:
        return {m: c // g for m, c in terms.items()}
    return terms


def _to_int_terms(p: Polynomial):
    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


class _Engine:
    """Mutable completion state: parallel arrays of basis data."""

    def __init__(self, order: MonomialOrder):
        self.key = order.key
        self.terms: list[dict] = []
        self.lms: list[tuple] = []
        self.lcs: list[int] = []
        self.scan: list[int] = []  # indices sorted by (lm key, idx) for reducer choice

    def add(self, terms):
        lm = max(terms, key=self.key)
        terms = _primitive(terms, lm)
        idx = len(self.terms)
        self.terms.append(terms)
        self.lms.append(lm)
        self.lcs.append(terms[lm])
        k = (self.key(lm), idx)
        lo, hi = 0, len(self.scan)
        while lo < hi:
            mid = (lo + hi) // 2
            if (self.key(self.lms[self.scan[mid]]), self.scan[mid]) < k:
                lo = mid + 1
            else:
                hi = mid
        self.scan.insert(lo, idx)
        return idx

    def find_reducer(self, m, skip=-1):
        for i in self.scan:
            if i != skip and _divides(self.lms[i], m):
                return i
        return -1

    def reduce(self, terms, skip=-1):
        """Full normal-form reduction up to a positive scalar multiple."""
        terms = dict(terms)
        remainder = {}
        key = self.key
        steps = 0
        while terms:
            lm = max(terms, key=key)
            i = self.find_reducer(lm, skip)
            if i < 0:
                remainder[lm] = terms.pop(lm)
                continue
            c = terms[lm]
            a = self.lcs[i]
            g0 = gcd(a, c)
            mt, mg = a // g0, c // g0
            if mt < 0:
                mt, mg = -mt, -mg
            if mt != 1:
                for m in terms:
                    terms[m] *= mt
                for m in remainder:
                    remainder[m] *= mt
            shift = tuple(map(sub, lm, self.lms[i]))
            if any(shift):
                for me, ce in self.terms[i].items():
                    k2 = tuple(map(add, me, shift))
                    v = terms.get(k2, 0) - mg * ce
                    if v:
                        terms[k2] = v
                    else:
                        del terms[k2]
            else:
                for me, ce in self.terms[i].items():
                    v = terms.get(me, 0) - mg * ce
                    if v:
                        terms[me] = v
                    else:
                        del terms[me]
            steps += 1
            if steps % 64 == 0 and terms:
                g = 0
                for v in terms.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g != 1:
                    for v in remainder.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                if g > 1:
                    for m in terms:
                        terms[m] //= g
                    for m in remainder:
                        remainder[m] //= g
        return remainder


def _s_poly_int(ti, lmi, lci, tj, lmj, lcj):
    lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
    si = tuple(map(sub, lcm, lmi))
    sj = tuple(map(sub, lcm, lmj))
    g0 = gcd(lci, lcj)
    mi, mj = lcj // g0, lci // g0
    res = {}
    for m, c in ti.items():
        res[tuple(map(add, m, si))] = mi * c
    for m, c in tj.items():
        k = tuple(map(add, m, sj))
        v = res.get(k, 0) - mj * c
        if v:
            res[k] = v
        else:
            del res[k]
    return res


def buchberger(source, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the given generators over the rationals."""
    if isinstance(source, IdealPresentation):
        gens = source.polynomials()
        pres = source
    else:
        gens = list(source)
        pres = None
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise GroebnerError("empty generator list")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise GroebnerError("mixed variable counts in generator list")

    eng = _Engine(order)
    key = order.key

    # seed with inter-reduced input, smallest leading monomials first
    seeds = sorted((_to_int_terms(g) for g in gens), key=lambda t: key(max(t, key=key)))
    for t in seeds:
        r = eng.reduce(t)
        if r:
            eng.add(r)

    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(j):
        lmj = eng.lms[j]
        for i in range(j):
            lmi = eng.lms[i]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
            if lcm == tuple(map(add, lmi, lmj)):
                continue  # coprime leading terms: S-poly reduces to 0
            pending.add((i, j))
            heapq.heappush(heap, (sum(lcm), key(lcm), i, j))

    for j in range(len(eng.terms)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi, lmj = eng.lms[i], eng.lms[j]
        lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
        chained = False
        for k in range(len(eng.terms)):
            if k == i or k == j or not _divides(eng.lms[k], lcm):
                continue
            lmk = eng.lms[k]
            # strict sub-lcm guards keep the chain criterion sound when
            # several pairs share one lcm
            if tuple(max(a, b) for a, b in zip(lmi, lmk)) == lcm:
                continue
            if tuple(max(a, b) for a, b in zip(lmj, lmk)) == lcm:
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chained = True
                break
        if chained:
            continue
        s = _s_poly_int(eng.terms[i], eng.lms[i], eng.lcs[i], eng.terms[j], eng.lms[j], eng.lcs[j])
        if not s:
            continue
        r = eng.reduce(s)
        if r:
            push_pairs(eng.add(r))

    # minimal generating set of the leading-term ideal
    order_idx = sorted(range(len(eng.terms)), key=lambda i: (key(eng.lms[i]), i))
    kept: list[int] = []
    for i in order_idx:
        if not any(_divides(eng.lms[k], eng.lms[i]) for k in kept):
            kept.append(i)

    # tail-reduce to the unique auto-reduced form
    final = _Engine(order)
    for i in kept:
        final.add(eng.terms[i])
    changed = True
    while changed:
        changed = False
        for pos in range(len(final.terms)):
            r = final.reduce(final.terms[pos], skip=pos)
            lm = max(r, key=key)
            r = _primitive(r, lm)
            if r != final.terms[pos]:
                final.terms[pos] = r
                final.lms[pos] = lm
                final.lcs[pos] = r[lm]
                changed = True

    monic = []
    for t in final.terms:
        lm = max(t, key=key)
        lc = t[lm]
        monic.append(Polynomial(n, {m: Fraction(c, lc) for m, c in t.items()}))
    monic.sort(key=lambda p: key(max(p.terms, key=key)))
    return GroebnerBasis(tuple(monic), order, pres)


# -- normal forms and the staircase -----------------------------------


def normal_form(p: Polynomial, gb: GroebnerBasis, rng=None) -> Polynomial:
    """Unique remainder of p modulo gb: no term divisible by a leading term.

    rng, when given, picks among eligible reducers at every step; the result
    must not depend on the choice (confluence), which the test suite checks.
    """
    if not gb.polys:
        raise GroebnerError("empty basis")
    n = gb.polys[0].n
    if p.n != n:
        raise GroebnerError(f"variable count mismatch: {p.n} vs {n}")
    key = gb.order.key
    lms = gb.leading_monomials()
    terms = {m: Fraction(c) for m, c in p.terms.items()}
    remainder: dict = {}
    while terms:
        lm = max(terms, key=key)
        eligible = [i for i, m in enumerate(lms) if _divides(m, lm)]
        if not eligible:
            remainder[lm] = terms.pop(lm)
            continue
        i = eligible[0] if rng is None else rng.choice(eligible)
        c = terms[lm]
        shift = tuple(map(sub, lm, lms[i]))
        for me, ce in gb.polys[i].terms.items():
            k2 = tuple(map(add, me, shift))
            v = terms.get(k2, 0) - c * ce
            if v:
                terms[k2] = v
            else:
                del terms[k2]
    return Polynomial(n, remainder)


def reduces_to_zero(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero()


def default_degree_cap(partition) -> int:
    n = partition.n
    return n * partition.springer_dimension() + n + 1


def standard_monomials(gb: GroebnerBasis, degree_cap: int | None = None) -> list[tuple[int, ...]]:
    """Monomials outside the leading-term ideal, sorted by (degree, exponents).

    Raises InfiniteQuotient when some variable has no pure-power leading
    term (scanned up to degree_cap), since the staircase then contains an
    infinite ray.
    """
    n = gb.n
    lts = gb.leading_monomials()
    if degree_cap is None:
        cap = 1 + max(sum(m) for m in lts) if lts else 1
        if gb.source is not None:
            cap = max(cap, default_degree_cap(gb.source.partition))
    else:
        cap = degree_cap
    bounds = []
    for j in range(n):
        pure = [m[j] for m in lts if sum(m) == m[j]]
        if not pure:
            raise InfiniteQuotient(
                f"variable {j + 1} has no pure-power leading term below degree {cap}"
            )
        bounds.append(min(pure))
    if any(b > cap for b in bounds):
        raise InfiniteQuotient(f"staircase exceeds degree cap {cap}")

    out = []
    vec = [0] * n

    def descend(j):
        if j == n:
            out.append(tuple(vec))
            return
        for e in range(bounds[j]):
            vec[j] = e
            if any(_divides(m, vec) for m in lts):
                break  # larger e stays divisible by the same leading term
            descend(j + 1)
        vec[j] = 0

    descend(0)
    out.sort(key=lambda m: (sum(m), m))
    return out


def quotient_rank(gb: GroebnerBasis, degree_cap: int | None = None) -> int:
    return len(standard_monomials(gb, degree_cap))


# -- Hilbert function of homogeneous ideals ----------------------------


def _require_homogeneous(pres: IdealPresentation):
    for g in pres.generators:
        if g.poly.is_zero():
            continue
        degs = {sum(m) for m in g.poly.terms}
        if len(degs) != 1:
            raise GroebnerError("hilbert_function requires homogeneous generators")


@lru_cache(maxsize=None)
def groebner_basis_for(pres: IdealPresentation, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Session-cached completion, keyed by the presentation value."""
    return buchberger(pres, order)


def hilbert_function(pres: IdealPresentation, d: int, order: MonomialOrder = DEGREVLEX) -> int:
    """Rank of the degree-d graded piece of the quotient by a homogeneous ideal."""
    if d < 0:
        raise GroebnerError(f"degree must be >= 0, got {d}")
    _require_homogeneous(pres)
    gb = groebner_basis_for(pres, order)
    return sum(1 for m in standard_monomials(gb) if sum(m) == d)


def hilbert_series(pres: IdealPresentation, order: MonomialOrder = DEGREVLEX) -> tuple[int, ...]:
    """Coefficients of the Hilbert series up to the top nonzero degree."""
    _require_homogeneous(pres)
    gb = groebner_basis_for(pres, order)
    monos = standard_monomials(gb)
    top = max(sum(m) for m in monos)
    series = [0] * (top + 1)
    for m in monos:
        series[sum(m)] += 1
    return tuple(series)


# -- persistent basis cache --------------------------------------------


def source_hash(pres: IdealPresentation, order: MonomialOrder) -> str:
    payload = presentation_json(pres) + json.dumps(order.to_dict(), sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_path(pres: IdealPresentation, order: MonomialOrder, cache_dir: str) -> str:
    name = "gb_{}_{}_{}_{}.json".format(
        "-".join(str(p) for p in pres.partition.parts),
        pres.flavor,
        pres.convention,
        order.kind,
    )
    return os.path.join(cache_dir, name)


def basis_to_dict(gb: GroebnerBasis, pres: IdealPresentation) -> dict:
    return {
        "schema_version": 1,
        "source_hash": source_hash(pres, gb.order),
        "order": gb.order.to_dict(),
        "basis": [p.render(pres.convention) for p in gb.polys],
    }


def cached_buchberger(
    pres: IdealPresentation, order: MonomialOrder = DEGREVLEX, cache_dir: str | None = None
) -> GroebnerBasis:
    """File-cached completion; corrupted or stale entries are recomputed."""
    if cache_dir is None:
        return groebner_basis_for(pres, order)
    path = cache_path(pres, order, cache_dir)
    want = source_hash(pres, order)
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if doc.get("source_hash") == want and doc.get("order") == order.to_dict():
            polys = tuple(
                Polynomial.parse(text, pres.n, pres.convention) for text in doc["basis"]
            )
            return GroebnerBasis(polys, order, pres)
    except (OSError, ValueError, KeyError):
        pass
    gb = groebner_basis_for(pres, order)
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(basis_to_dict(gb, pres), fh, sort_keys=True, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return gb


# -- postcondition helper (used by the test suite) ---------------------


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key
    lmf = max(f.terms, key=key)
    lmg = max(g.terms, key=key)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    mf = {tuple(map(sub, lcm, lmf)): Fraction(1, 1) / f.terms[lmf]}
    mg = {tuple(map(sub, lcm, lmg)): Fraction(1, 1) / g.terms[lmg]}
    return Polynomial(f.n, mf) * f - Polynomial(g.n, mg) * g
