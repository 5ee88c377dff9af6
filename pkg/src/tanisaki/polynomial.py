"""Sparse multivariate polynomials over exact integers and rationals.

Terms are stored in a dict keyed by fixed-length exponent tuples; coefficients
are Python ints with a transparent Fraction escape hatch, so no arithmetic is
ever approximate.  Polynomials are immutable values: every operation returns
a fresh canonical instance.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache


class PolynomialError(ValueError):
    pass


def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient C(a, b) for integer a, b >= 0."""
    if b < 0:
        raise PolynomialError(f"binomial lower index must be >= 0, got {b}")
    if a >= 0:
        return math.comb(a, b)
    # C(a, b) = (-1)^b * C(-a + b - 1, b) for a < 0
    return (-1) ** b * math.comb(-a + b - 1, b)


def _norm_coeff(c):
    """Collapse integral Fractions to int; reject floats."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise PolynomialError(f"coefficient must be exact (int or Fraction), got {type(c).__name__}")


def degrevlex_key(exps: tuple[int, ...]):
    """Sort key realizing graded reverse-lexicographic order (ascending)."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Polynomial:
    """Immutable sparse polynomial in n variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise PolynomialError(f"variable count must be >= 0, got {n}")
        canon = {}
        if terms:
            for exps, c in terms.items():
                c = _norm_coeff(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise PolynomialError(f"bad exponent vector {exps} for {n} variables")
                canon[exps] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, j: int) -> "Polynomial":
        """The j-th variable, 1-based."""
        if not 1 <= j <= n:
            raise PolynomialError(f"variable index {j} out of range 1..{n}")
        e = [0] * n
        e[j - 1] = 1
        return cls(n, {tuple(e): 1})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise PolynomialError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = res.get(m, 0) + c
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return Polynomial(self.n, res)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial(self.n, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = res.get(m, 0) + c1 * c2
                if v:
                    res[m] = v
                else:
                    del res[m]
        return Polynomial(self.n, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolynomialError("negative polynomial power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, exps) -> int | Fraction:
        return self.terms.get(tuple(exps), 0)

    def graded_component(self, d: int) -> "Polynomial":
        if d < 0:
            raise PolynomialError(f"degree must be >= 0, got {d}")
        return Polynomial(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def augmentation(self):
        """Evaluation at all variables = 1."""
        return _norm_coeff(Fraction(sum(self.terms.values())))

    def evaluate(self, point):
        point = list(point)
        if len(point) != self.n:
            raise PolynomialError("evaluation point has wrong length")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return _norm_coeff(total)

    # -- substitutions ------------------------------------------------

    def shift_variables(self, delta) -> "Polynomial":
        """Substitute x_j -> x_j + delta for every variable."""
        if delta == 0:
            return self
        res = {}
        for m, c in self.terms.items():
            # expand prod_j (x_j + delta)^{e_j} term by term
            partial = {(0,) * self.n: c}
            for j, e in enumerate(m):
                if not e:
                    continue
                nxt = {}
                for pm, pc in partial.items():
                    for a in range(e + 1):
                        w = pc * math.comb(e, a) * delta ** (e - a)
                        key = pm[:j] + (a,) + pm[j + 1:]
                        v = nxt.get(key, 0) + w
                        if v:
                            nxt[key] = v
                        else:
                            nxt.pop(key, None)
                partial = nxt
            for pm, pc in partial.items():
                v = res.get(pm, 0) + pc
                if v:
                    res[pm] = v
                else:
                    res.pop(pm, None)
        return Polynomial(self.n, res)

    def permute_variables(self, sigma) -> "Polynomial":
        """Substitute x_j -> x_{sigma(j)}; sigma is a 1-based bijection of [1, n]."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, self.n + 1)):
            raise PolynomialError(f"{sigma} is not a permutation of 1..{self.n}")
        res = {}
        for m, c in self.terms.items():
            new = [0] * self.n
            for j, e in enumerate(m):
                new[sigma[j] - 1] = e
            res[tuple(new)] = c
        return Polynomial(self.n, res)

    # -- identity -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- text form ----------------------------------------------------

    def render(self, prefix: str = "u") -> str:
        """Canonical text form, terms in descending degrevlex order."""
        if not self.terms:
            return "0"
        chunks = []
        for m in sorted(self.terms, key=degrevlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for j, e in enumerate(m):
                if e == 1:
                    factors.append(f"{prefix}{j + 1}")
                elif e > 1:
                    factors.append(f"{prefix}{j + 1}^{e}")
            neg = c < 0
            mag = -c if neg else c
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Polynomial({self.n}, {self.render()})"

    @classmethod
    def parse(cls, text: str, n: int, prefix: str = "u") -> "Polynomial":
        """Parse the grammar produced by render (sums of monomial terms)."""
        tokens = re.findall(
            rf"(\d+/\d+|\d+|{re.escape(prefix)}\d+|[+\-*^])|(\S)", text
        )
        bad = [b for _, b in tokens if b]
        if bad:
            raise PolynomialError(f"unexpected character {bad[0]!r} in polynomial text")
        toks = [t for t, _ in tokens if t]
        terms: dict[tuple, object] = {}
        i = 0
        var_re = re.compile(rf"^{re.escape(prefix)}(\d+)$")
        while i < len(toks):
            sign = 1
            while i < len(toks) and toks[i] in "+-":
                if toks[i] == "-":
                    sign = -sign
                i += 1
            if i >= len(toks):
                raise PolynomialError("dangling sign in polynomial text")
            coeff = Fraction(sign)
            exps = [0] * n
            expect_factor = True
            while i < len(toks):
                t = toks[i]
                if t in "+-":
                    break
                if t == "*":
                    i += 1
                    expect_factor = True
                    continue
                if not expect_factor:
                    raise PolynomialError(f"missing operator before {t!r}")
                mvar = var_re.match(t)
                if mvar:
                    j = int(mvar.group(1))
                    if not 1 <= j <= n:
                        raise PolynomialError(f"variable {t} out of range for n={n}")
                    e = 1
                    if i + 1 < len(toks) and toks[i + 1] == "^":
                        if i + 2 >= len(toks) or not toks[i + 2].isdigit():
                            raise PolynomialError("malformed exponent")
                        e = int(toks[i + 2])
                        i += 2
                    exps[j - 1] += e
                elif "/" in t:
                    num, den = t.split("/")
                    coeff *= Fraction(int(num), int(den))
                elif t.isdigit():
                    coeff *= int(t)
                else:
                    raise PolynomialError(f"unexpected token {t!r}")
                i += 1
                expect_factor = False
            key = tuple(exps)
            prev = terms.get(key, 0)
            total = prev + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return cls(n, terms)


@lru_cache(maxsize=None)
def elementary_symmetric(n: int, k: int, indices: tuple[int, ...] | None = None) -> Polynomial:
    """e_k of the selected variables (1-based; all n variables when omitted).

    e_0 = 1; identically zero when k exceeds the number of selected variables.
    """
    if k < 0:
        raise PolynomialError(f"elementary symmetric index must be >= 0, got {k}")
    if indices is None:
        indices = tuple(range(1, n + 1))
    if k == 0:
        return Polynomial.constant(n, 1)
    if k > len(indices):
        return Polynomial.zero(n)
    # column DP over prod (1 + x_i t): coeffs[j] accumulates e_j
    coeffs = [Polynomial.constant(n, 1)] + [Polynomial.zero(n)] * k
    for i in indices:
        x = Polynomial.variable(n, i)
        for j in range(min(k, len(indices)), 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * x
    return coeffs[k]
