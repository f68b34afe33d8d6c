"""Constant-coefficient differential operators on the big cell ``Sym_n``.

Coordinates are ``b_1..b_n`` (diagonal) and ``c_ij`` for ``i < j``
(off-diagonal), in that order.  Operators and polynomials share one sparse
representation: exponent tuple -> Fraction, with no zero coefficients.
Terms are ordered graded-lexicographically.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

MAX_MONOMIALS = 10_000


class DimensionError(ValueError):
    """A graded piece is too large for exact row reduction."""


def variables(n: int) -> list[str]:
    return [f"b{i}" for i in range(1, n + 1)] + [
        f"c{i}{j}" if j < 10 else f"c{i},{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ]


def _index(n: int, name: str) -> int:
    names = variables(n)
    if name not in names:
        raise KeyError(f"no variable {name!r} in rank {n}")
    return names.index(name)


def diag_index(n: int, i: int) -> int:
    return i - 1


def offdiag_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    if i == j:
        raise ValueError("off-diagonal index needs i != j")
    # pairs (1,2),(1,3),...,(1,n),(2,3),...
    before = sum(n - a for a in range(1, i))
    return n + before + (j - i - 1)


def _graded_key(e: tuple[int, ...]):
    return (sum(e), e)


@dataclass(frozen=True)
class _Sparse:
    n: int
    terms: Mapping[tuple[int, ...], Fraction]

    _symbol = ""

    def __post_init__(self) -> None:
        width = len(variables(self.n))
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != width or any(x < 0 for x in e):
                raise ValueError(f"bad multi-index {e} for rank {self.n}")
            if isinstance(c, float):
                raise TypeError("coefficients must be exact")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: c for e, c in sorted(clean.items(), key=lambda t: _graded_key(t[0])) if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, n: int):
        return cls(n, {})

    @classmethod
    def one(cls, n: int):
        return cls(n, {(0,) * len(variables(n)): Fraction(1)})

    @classmethod
    def term(cls, n: int, powers: Mapping[str, int], coeff=1):
        e = [0] * len(variables(n))
        for name, k in powers.items():
            e[_index(n, name)] += k
        return cls(n, {tuple(e): Fraction(coeff)})

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, tuple(self.terms.items())))

    def _check(self, other) -> None:
        if type(other) is not type(self) or other.n != self.n:
            raise TypeError("incompatible operands")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return type(self)(self.n, out)

    def __neg__(self):
        return type(self)(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return type(self)(self.n, {e: c * v for e, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def _convolve(self, other):
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return type(self)(self.n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, powers: Mapping[str, int]) -> Fraction:
        e = [0] * len(variables(self.n))
        for name, k in powers.items():
            e[_index(self.n, name)] += k
        return self.terms.get(tuple(e), Fraction(0))

    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero has no degree")
        return max(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int):
        return type(self)(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def _monomial_str(self, e: tuple[int, ...]) -> str:
        parts = []
        for name, k in zip(variables(self.n), e):
            if k:
                parts.append(f"{self._symbol}{name}" + (f"^{k}" if k > 1 else ""))
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items(), key=lambda t: _graded_key(t[0]), reverse=True):
            mono = self._monomial_str(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "variables": variables(self.n),
            "terms": [{"exponents": list(e), "coefficient": str(c)} for e, c in self.terms.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict):
        return cls(data["n"], {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in data["terms"]})


class Polynomial(_Sparse):
    _symbol = ""

    @classmethod
    def variable(cls, n: int, name: str) -> Polynomial:
        return cls.term(n, {name: 1})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self._convolve(other)

    def degree(self) -> int:
        return self.max_degree()


class PolyDiffOp(_Sparse):
    _symbol = "d"

    @classmethod
    def partial(cls, n: int, name: str) -> PolyDiffOp:
        return cls.term(n, {name: 1})

    def order(self) -> int:
        return self.max_degree()


def apply(op: PolyDiffOp, f: Polynomial) -> Polynomial:
    if op.n != f.n:
        raise TypeError("rank mismatch between operator and polynomial")
    out: dict[tuple[int, ...], Fraction] = {}
    for a, ca in op.terms.items():
        for m, cm in f.terms.items():
            if any(x > y for x, y in zip(a, m)):
                continue
            c = ca * cm
            for x, y in zip(a, m):
                for t in range(x):
                    c *= y - t
            e = tuple(y - x for x, y in zip(a, m))
            out[e] = out.get(e, Fraction(0)) + c
    return Polynomial(f.n, out)


def compose(a: PolyDiffOp, b: PolyDiffOp) -> PolyDiffOp:
    return a._convolve(b)


def operator_d() -> PolyDiffOp:
    """The order-3 operator on Sym_3 for the even block of ``[2,1,0]``."""
    t = PolyDiffOp.term
    return (
        t(3, {"b1": 1, "b2": 1, "b3": 1}, 4)
        - t(3, {"b1": 1, "c23": 2})
        - t(3, {"b2": 1, "c13": 2})
        - t(3, {"b3": 1, "c12": 2})
        + t(3, {"c12": 1, "c13": 1, "c23": 1})
    )


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def symmetric_entry(n: int, i: int, j: int) -> PolyDiffOp:
    """Entry (i, j) (1-based) of the matrix with d_{b_i} on the diagonal and d_{c_ij}/2 off it."""
    width = len(variables(n))
    e = [0] * width
    if i == j:
        e[diag_index(n, i)] = 1
        return PolyDiffOp(n, {tuple(e): Fraction(1)})
    e[offdiag_index(n, i, j)] = 1
    return PolyDiffOp(n, {tuple(e): Fraction(1, 2)})


def det_operator(n: int) -> PolyDiffOp:
    """Leibniz expansion of the determinant of :func:`symmetric_entry`."""
    if not 1 <= n <= 5:
        raise ValueError("det_operator is limited to 1 <= n <= 5")
    total = PolyDiffOp.zero(n)
    for p in itertools.permutations(range(n)):
        term = PolyDiffOp.one(n)
        for i in range(n):
            term = compose(term, symmetric_entry(n, i + 1, p[i] + 1))
        total = total + term.scale(_perm_sign(p))
    return total


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    width = len(variables(n))
    out = []
    # stars and bars over the variables
    for bars in itertools.combinations(range(d + width - 1), width - 1):
        prev, e = -1, []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + width - 1 - prev - 1)
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _rank(vectors: Iterable[dict[int, Fraction]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for v in vectors:
        v = dict(v)
        while v:
            p = min(v)
            if p not in pivots:
                pivots[p] = v
                break
            row = pivots[p]
            f = v[p] / row[p]
            for key, val in row.items():
                nv = v.get(key, Fraction(0)) - f * val
                if nv:
                    v[key] = nv
                else:
                    v.pop(key, None)
    return len(pivots)


def surjectivity_rank(op: PolyDiffOp, d: int) -> tuple[int, int]:
    """Rank of ``f -> (op f)_d`` from degree ``d + order`` to degree ``d``, and dim of the target."""
    n = op.n
    order = 0 if op.is_zero() else op.order()
    width = len(variables(n))
    src_dim = _count(width, d + order)
    if src_dim > MAX_MONOMIALS:
        raise DimensionError(f"{src_dim} source monomials exceeds the limit of {MAX_MONOMIALS}")
    target = monomials(n, d)
    col = {e: i for i, e in enumerate(target)}
    images = []
    for e in monomials(n, d + order):
        img = apply(op, Polynomial(n, {e: Fraction(1)})).homogeneous_part(d)
        images.append({col[m]: c for m, c in img.terms.items()})
    return _rank(images), len(target)


def _count(width: int, d: int) -> int:
    return comb(d + width - 1, width - 1)
