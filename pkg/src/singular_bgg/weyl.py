"""Type C_n roots, weights and the Weyl group as signed permutations.

Everything here is exact: roots and Weyl elements use integer tuples,
weights use :class:`fractions.Fraction`.  The brute-force routines at the
bottom (:func:`hasse_bruteforce`, :func:`min_coset_reps`, ...) enumerate the
whole Weyl group and serve as ground truth for the fast LS-word machinery.

Signed-permutation convention ("coordinates move")::

    (w lambda)[perm[i]] = signs[i] * lambda[i]

i.e. ``w(e_i) = signs[i] * e_{perm[i]}``.  ``perm`` is stored 0-based.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

# Oracle rank caps; BGG_MAX_RANK overrides both.
MAX_ENUM_RANK = 7
MAX_COSET_RANK = 6


def enum_cap() -> int:
    return int(os.environ.get("BGG_MAX_RANK", MAX_ENUM_RANK))


def coset_cap() -> int:
    return int(os.environ.get("BGG_MAX_RANK", MAX_COSET_RANK))


class RankError(ValueError):
    """Rank outside the supported range of an operation."""


# --------------------------------------------------------------------------
# roots

_KINDS = ("A", "B", "C")


@dataclass(frozen=True, order=True)
class Root:
    """Positive root of C_n: ``A(i,j) = e_i - e_j``, ``B(i) = 2 e_i``,
    ``C(i,j) = e_i + e_j`` (indices 1-based, ``i < j``).

    For ``B`` the second index is stored equal to the first, so that the
    dataclass ordering is lexicographic in ``(kind, i, j)``.
    """

    kind: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.i < 1:
            raise ValueError("root indices are 1-based")
        if self.kind == "B":
            if self.j != self.i:
                raise ValueError("B roots carry a single index")
        elif not self.i < self.j:
            raise ValueError(f"{self.kind} root needs i < j, got {self.i}, {self.j}")

    @classmethod
    def a(cls, i: int, j: int) -> Root:
        return cls("A", i, j)

    @classmethod
    def b(cls, i: int) -> Root:
        return cls("B", i, i)

    @classmethod
    def c(cls, i: int, j: int) -> Root:
        """``c_ij``; ``c_ii`` is accepted as an alias for ``b_i``."""
        return cls("B", i, i) if i == j else cls("C", i, j)

    def vector(self, n: int) -> tuple[int, ...]:
        if max(self.i, self.j) > n:
            raise RankError(f"root {self} does not live in rank {n}")
        v = [0] * n
        if self.kind == "A":
            v[self.i - 1], v[self.j - 1] = 1, -1
        elif self.kind == "B":
            v[self.i - 1] = 2
        else:
            v[self.i - 1], v[self.j - 1] = 1, 1
        return tuple(v)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> Root:
        """Inverse of :meth:`vector` on positive roots."""
        support = [(idx + 1, x) for idx, x in enumerate(v) if x]
        if len(support) == 1 and support[0][1] == 2:
            return cls.b(support[0][0])
        if len(support) == 2:
            (i, x), (j, y) = support
            if (x, y) == (1, -1):
                return cls.a(i, j)
            if (x, y) == (1, 1):
                return cls.c(i, j)
        raise ValueError(f"{tuple(v)} is not a positive root")

    def __str__(self) -> str:
        if self.kind == "B":
            return f"b{self.i}"
        sep = "" if self.j < 10 else ","
        return f"{self.kind.lower()}{self.i}{sep}{self.j}"


def positive_roots(n: int) -> list[Root]:
    """All n^2 positive roots, sorted by ``(kind, i, j)``."""
    roots = [Root.a(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    roots += [Root.b(i) for i in range(1, n + 1)]
    roots += [Root.c(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return sorted(roots)


def simple_root(n: int, k: int) -> Root:
    if not 1 <= k <= n:
        raise RankError(f"simple root index {k} out of range 1..{n}")
    return Root.b(n) if k == n else Root.a(k, k + 1)


def nilradical_roots(n: int) -> list[Root]:
    """Roots of the nilradical for the parabolic crossing the long root."""
    return [r for r in positive_roots(n) if r.kind != "A"]


def is_positive(v: Sequence[int]) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector has no sign")


# --------------------------------------------------------------------------
# weights


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("weights are exact; pass int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Weight:
    """An n-tuple of rationals.  ``shifted`` marks values of the form
    lambda + rho.  Inputs are coerced to :class:`Fraction`; floats are refused.
    """

    coords: tuple[Fraction, ...]
    shifted: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(_frac(x) for x in self.coords))

    @classmethod
    def parse(cls, text: str, shifted: bool = False) -> Weight:
        body = text.strip().strip("[]")
        return cls(tuple(Fraction(t) for t in body.split(",") if t.strip()), shifted)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, idx):
        return self.coords[idx]

    def __neg__(self) -> Weight:
        return Weight(tuple(-x for x in self.coords), self.shifted)

    def shift(self) -> Weight:
        if self.shifted:
            raise ValueError("weight is already rho-shifted")
        return Weight(tuple(x + r for x, r in zip(self.coords, rho(self.n))), True)

    def unshift(self) -> Weight:
        if not self.shifted:
            raise ValueError("weight is not rho-shifted")
        return Weight(tuple(x - r for x, r in zip(self.coords, rho(self.n))), False)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def is_dominant(self) -> bool:
        c = self.coords
        return all(a >= b for a, b in zip(c, c[1:])) and (not c or c[-1] >= 0)

    def is_regular(self) -> bool:
        absval = [abs(x) for x in self.coords]
        return 0 not in absval and len(set(absval)) == len(absval)

    def is_strictly_decreasing(self) -> bool:
        """Strict dominance for the Levi gl(n) of the Lagrangian parabolic."""
        c = self.coords
        return all(a > b for a, b in zip(c, c[1:]))

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.coords) + "]"


def rho(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def rho_weight(n: int) -> Weight:
    """rho itself, as the shifted value of the zero weight."""
    return Weight(rho(n), shifted=True)


def inner(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def dynkin_labels(weight: Weight) -> tuple[Fraction, ...]:
    """Pairings with the simple coroots: ``l_i - l_{i+1}`` and ``l_n``."""
    c = weight.coords
    return tuple(a - b for a, b in zip(c, c[1:])) + ((c[-1],) if c else ())


# --------------------------------------------------------------------------
# the Weyl group


@dataclass(frozen=True, order=True)
class WeylElement:
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if len(self.signs) != n:
            raise ValueError("perm and signs must have equal length")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def longest(cls, n: int) -> WeylElement:
        return cls(tuple(range(n)), (-1,) * n)

    @classmethod
    def from_window(cls, window: Sequence[int] | str) -> WeylElement:
        """Build from signed window notation: entry i is ``+-(perm[i] + 1)``."""
        if isinstance(window, str):
            window = [int(t) for t in window.strip().strip("[]").split(",") if t.strip()]
        perm = tuple(abs(x) - 1 for x in window)
        signs = tuple(1 if x > 0 else -1 for x in window)
        return cls(perm, signs)

    def window(self) -> tuple[int, ...]:
        return tuple(s * (p + 1) for p, s in zip(self.perm, self.signs))

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.window()) + "]"

    def __mul__(self, other: WeylElement) -> WeylElement:
        """Composition ``self o other``."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[p] for p in other.perm)
        signs = tuple(s * self.signs[p] for p, s in zip(other.perm, other.signs))
        return WeylElement(perm, signs)

    def inverse(self) -> WeylElement:
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return WeylElement(tuple(perm), tuple(signs))

    def act_vector(self, v: Sequence):
        if len(v) != self.n:
            raise ValueError(f"dimension mismatch: rank {self.n} element, vector of length {len(v)}")
        out = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)


def act(w: WeylElement, weight: Weight) -> Weight:
    return Weight(w.act_vector(weight.coords), weight.shifted)


def affine_act(w: WeylElement, weight: Weight) -> Weight:
    """``w . lambda = w(lambda + rho) - rho`` on an unshifted weight."""
    if weight.shifted:
        raise ValueError("affine action expects an unshifted weight")
    return act(w, weight.shift()).unshift()


def reflection(root: Root, n: int) -> WeylElement:
    alpha = root.vector(n)
    norm = inner(alpha, alpha)
    perm, signs = [], []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        coef = 2 * inner(e, alpha) / norm
        image = [Fraction(x) - coef * a for x, a in zip(e, alpha)]
        (j,) = [idx for idx, x in enumerate(image) if x]
        perm.append(j)
        signs.append(int(image[j]))
    return WeylElement(tuple(perm), tuple(signs))


def simple_reflections(n: int) -> list[WeylElement]:
    return [reflection(simple_root(n, k), n) for k in range(1, n + 1)]


def enumerate_weyl(n: int) -> list[WeylElement]:
    """All 2^n n! elements of W(C_n), permutations outermost."""
    if not 1 <= n <= enum_cap():
        raise RankError(f"enumeration rank must be in 1..{enum_cap()}, got {n}")
    return [
        WeylElement(perm, signs)
        for perm in itertools.permutations(range(n))
        for signs in itertools.product((1, -1), repeat=n)
    ]


def phi_set(w: WeylElement) -> frozenset[Root]:
    """``{alpha > 0 : w^-1 alpha < 0}``."""
    winv = w.inverse()
    n = w.n
    return frozenset(r for r in positive_roots(n) if not is_positive(winv.act_vector(r.vector(n))))


def length(w: WeylElement) -> int:
    return len(phi_set(w))


def bfs_lengths(n: int) -> dict[WeylElement, int]:
    """Word length in the simple reflections, by breadth-first search."""
    gens = simple_reflections(n)
    start = WeylElement.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = s * w
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def in_hasse(w: WeylElement) -> bool:
    """Membership in W^p: w^-1 keeps every Levi root a_ij positive."""
    winv = w.inverse()
    n = w.n
    return all(
        is_positive(winv.act_vector(Root.a(i, j).vector(n)))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )


def hasse_bruteforce(n: int) -> set[WeylElement]:
    """``{w : Phi_w subset of Delta(u)}`` by scanning the whole group."""
    return {w for w in enumerate_weyl(n) if in_hasse(w)}


def generated_subgroup(gens: Iterable[WeylElement], n: int) -> set[WeylElement]:
    gens = list(gens)
    group = {WeylElement.identity(n)}
    frontier = list(group)
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                v = w * s
                if v not in group:
                    group.add(v)
                    new.append(v)
        frontier = new
    return group


def _check_sigma(n: int, sigma: Iterable[int]) -> list[int]:
    sigma = sorted(set(sigma))
    if not sigma:
        raise ValueError("singular set must be nonempty")
    if sigma[0] < 1 or sigma[-1] > n:
        raise RankError(f"simple root indices must lie in 1..{n}")
    for a, b in zip(sigma, sigma[1:]):
        if b == a + 1:
            raise ValueError(f"adjacent singular roots {a}, {b}: empty block")
    return sigma


def min_coset_reps(n: int, sigma: Iterable[int]) -> set[WeylElement]:
    """Minimal-length representatives of the left cosets ``w W_sigma``
    lying entirely inside W^p.
    """
    sigma = _check_sigma(n, sigma)
    if n > coset_cap():
        raise RankError(f"coset search rank must be at most {coset_cap()}, got {n}")
    w_sigma = generated_subgroup((reflection(simple_root(n, k), n) for k in sigma), n)
    hasse = hasse_bruteforce(n)
    reps: set[WeylElement] = set()
    seen: set[WeylElement] = set()
    for w in hasse:
        if w in seen:
            continue
        coset = {w * z for z in w_sigma}
        seen |= coset
        if not coset <= hasse:
            continue
        lengths = {v: length(v) for v in coset}
        shortest = min(lengths.values())
        best = [v for v, l in lengths.items() if l == shortest]
        if len(best) != 1:
            raise AssertionError(f"coset of {w} has no unique minimal element")
        reps.add(best[0])
    return reps


def affine_stabilizer(weight: Weight) -> set[WeylElement]:
    """``{z : z . lambda = lambda}`` by enumeration (weight unshifted)."""
    return {z for z in enumerate_weyl(weight.n) if affine_act(z, weight) == weight}


def iter_reflections(n: int) -> Iterator[tuple[Root, WeylElement]]:
    for r in positive_roots(n):
        yield r, reflection(r, n)
