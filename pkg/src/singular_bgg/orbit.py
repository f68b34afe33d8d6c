"""Semi-regular singular characters and their singular orbits.

A character ``lambda + rho`` is semi-regular when it is orthogonal to exactly
one simple root ``alpha_k``.  For ``k < n`` (first kind) the pair of equal
coordinates at ``k, k+1`` forces the LS digits there to be ``01``; for
``k = n`` (second kind) the trailing zero forces a trailing ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lsword import LSWord, all_words, ls_act
from .weyl import RankError, Weight

FIRST = "first"
SECOND = "second"
EVEN = "even"
ODD = "odd"


class HigherSingularityError(ValueError):
    """More than one singular simple root; only semi-regular characters are supported."""


def singular_simple_roots(lambda_rho: Weight) -> set[int]:
    """1-based indices k with ``<lambda + rho, alpha_k^vee> = 0``."""
    if not lambda_rho.is_dominant():
        raise ValueError(f"{lambda_rho} is not dominant")
    c = lambda_rho.coords
    sigma = {k for k in range(1, len(c)) if c[k - 1] == c[k]}
    if c and c[-1] == 0:
        sigma.add(len(c))
    return sigma


@dataclass(frozen=True)
class SingularCharacter:
    n: int
    k: int
    lambda_plus_rho: Weight

    def __post_init__(self) -> None:
        mu = self.lambda_plus_rho
        if not mu.shifted:
            raise ValueError("a singular character is given by lambda + rho (shifted)")
        if mu.n != self.n:
            raise ValueError("rank mismatch")
        if not mu.is_integral():
            raise ValueError("only integral characters are supported")
        sigma = singular_simple_roots(mu)
        if len(sigma) > 1:
            raise HigherSingularityError(
                f"singular roots {sorted(sigma)}: higher singularity unsupported (semi-regular only)"
            )
        if sigma != {self.k}:
            raise ValueError(f"{mu} is not singular exactly at alpha_{self.k}")

    @property
    def kind(self) -> str:
        return SECOND if self.k == self.n else FIRST

    @classmethod
    def from_weight(cls, lambda_rho: Weight) -> SingularCharacter:
        if not lambda_rho.shifted:
            lambda_rho = Weight(lambda_rho.coords, True)
        sigma = singular_simple_roots(lambda_rho)
        if len(sigma) != 1:
            if sigma:
                raise HigherSingularityError(f"singular roots {sorted(sigma)}: higher singularity unsupported")
            raise ValueError(f"{lambda_rho} is regular")
        (k,) = sigma
        return cls(lambda_rho.n, k, lambda_rho)

    def is_minimal(self) -> bool:
        return self == minimal_semiregular(self.n, self.k)

    def relative_head(self) -> Fraction:
        """The coordinate peeled off in front of the bar: the repeated value
        (first kind) or the trailing zero (second kind)."""
        return self.lambda_plus_rho.coords[self.k - 1]

    def relative_tail(self) -> Weight:
        """lambda + rho with one copy of the head coordinate removed."""
        c = list(self.lambda_plus_rho.coords)
        del c[self.k - 1]
        return Weight(tuple(c), True)


def minimal_semiregular(n: int, k: int) -> SingularCharacter:
    """``[n-1, ..., n-k, n-k, ..., 1]`` for k < n and ``[n-1, ..., 1, 0]`` for k = n."""
    if n < 1:
        raise RankError("rank must be positive")
    if not 1 <= k <= n:
        raise RankError(f"singular index k={k} out of range 1..{n}")
    if k == n:
        coords = tuple(range(n - 1, -1, -1))
    else:
        coords = tuple(range(n - 1, n - k - 1, -1)) + tuple(range(n - k, 0, -1))
    return SingularCharacter(n, k, Weight(coords, True))


def singular_hasse(n: int, k: int) -> list[LSWord]:
    """Words with digits ``01`` at (k, k+1), or a trailing 0 when k = n."""
    if not 1 <= k <= n:
        raise RankError(f"singular index k={k} out of range 1..{n}")
    if k == n:
        return [w for w in all_words(n) if w[n - 1] == 0]
    return [w for w in all_words(n) if (w[k - 1], w[k]) == (0, 1)]


def parity_split(words: list[LSWord]) -> tuple[list[LSWord], list[LSWord]]:
    """Split a second-kind singular Hasse diagram by the parity of the number of ones."""
    if not words or any(w[-1] != 0 for w in words):
        raise ValueError("parity splitting applies to second-kind orbits (words ending in 0) only")
    even = [w for w in words if w.popcount() % 2 == 0]
    odd = [w for w in words if w.popcount() % 2 == 1]
    return even, odd


def parity_of(w: LSWord) -> str:
    return EVEN if w.popcount() % 2 == 0 else ODD


def parity_class(n: int, parity: str) -> list[LSWord]:
    even, odd = parity_split(singular_hasse(n, n))
    if parity == EVEN:
        return even
    if parity == ODD:
        return odd
    raise ValueError(f"parity must be {EVEN!r} or {ODD!r}")


def collapse(w: LSWord, k: int) -> LSWord:
    """Bijection onto rank n-2: delete digits k, k+1 (first kind) or the
    last two digits (second kind)."""
    n = w.n
    if not 1 <= k <= n:
        raise RankError(f"singular index k={k} out of range 1..{n}")
    if k == n:
        if w[n - 1] != 0:
            raise ValueError(f"{w} is not in the second-kind singular Hasse diagram")
        return LSWord(w.bits[: n - 2])
    if (w[k - 1], w[k]) != (0, 1):
        raise ValueError(f"{w} is not in the singular Hasse diagram for k={k}")
    return LSWord(w.bits[: k - 1] + w.bits[k + 1 :])


def orbit_weights(sc: SingularCharacter) -> dict[LSWord, Weight]:
    out = {w: ls_act(w, sc.lambda_plus_rho) for w in singular_hasse(sc.n, sc.k)}
    for w, mu in out.items():
        if not mu.is_strictly_decreasing():
            raise AssertionError(f"{w} sends {sc.lambda_plus_rho} to non-dominant {mu}")
    return out


ORBIT = "orbit"
CROSSED = "crossed"
DUPLICATE = "duplicate"


def crossed_orbit(sc: SingularCharacter) -> dict[LSWord, tuple[Weight, str]]:
    """Image of lambda + rho under every W^p word, tagged ``orbit``,
    ``crossed`` (not strictly dominant) or ``duplicate`` (strictly dominant,
    but the word is not the minimal coset representative)."""
    keep = orbit_weights(sc)
    out = {}
    for w in all_words(sc.n):
        mu = ls_act(w, sc.lambda_plus_rho)
        if w in keep:
            out[w] = (mu, ORBIT)
        elif mu.is_strictly_decreasing():
            out[w] = (mu, DUPLICATE)
        else:
            out[w] = (mu, CROSSED)
    return out
