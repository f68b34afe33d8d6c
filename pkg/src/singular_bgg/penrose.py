"""Relative BGG resolutions, direct images and singular BGG complexes.

The twistor correspondence used here peels the singular coordinate of
``lambda + rho`` off in front of a bar, ``[head | tail]``.  The relative BGG
resolution runs over the words ``0 d_1 ... d_{n-1}`` acting on the tail; the
relative Bott-Borel-Weil rule then pushes every object down to the
Lagrangian Grassmannian (or kills it), which gives the first page of the
spectral sequence.  The singular BGG complex is the singular orbit with its
standard arrows plus the non-standard arrows that the spectral sequence
produces on later pages.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .lsword import (
    NON_STANDARD,
    STANDARD,
    Arrow,
    HasseGraph,
    LSWord,
    Node,
    all_words,
    is_isomorphism,
    ls_act,
    ls_length,
    regular_hasse,
    relative_hasse_eta,
)
from .orbit import (
    EVEN,
    ODD,
    SECOND,
    SingularCharacter,
    collapse,
    orbit_weights,
    parity_class,
    parity_of,
    singular_hasse,
)
from .weyl import Weight, inner, simple_root


class InvariantViolation(AssertionError):
    """An internal consistency check between two derivations failed."""


@dataclass(frozen=True)
class QWeight:
    """``[head | tail]``: a weight for the parabolic crossing alpha_1 and alpha_n."""

    head: Fraction
    tail: Weight

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", Fraction(self.head))

    def flatten(self) -> Weight:
        return Weight((self.head,) + self.tail.coords, self.tail.shifted)

    def __str__(self) -> str:
        return f"[{self.head} | " + ",".join(str(x) for x in self.tail.coords) + "]"


@dataclass(frozen=True)
class RelativeBGG:
    objects: list[tuple[LSWord, QWeight]]
    arrows: list[tuple[LSWord, LSWord]]

    def weight_of(self, w: LSWord) -> QWeight:
        return dict(self.objects)[w]


def tail_word(w: LSWord) -> LSWord:
    if w[0] != 0:
        raise ValueError(f"{w} does not start with 0")
    return LSWord(w.bits[1:])


def relative_bgg(sc: SingularCharacter) -> RelativeBGG:
    """Objects ``0 t`` carrying ``[head | t . tail]``, arrows inherited from W^p."""
    eta = relative_hasse_eta(sc.n)
    head, tail = sc.relative_head(), sc.relative_tail()
    objects = [(w, QWeight(head, ls_act(tail_word(w), tail))) for w in eta.words()]
    return RelativeBGG(objects, sorted(eta.edge_set()))


def direct_image(q: QWeight) -> tuple[int, Weight] | None:
    """Relative Bott-Borel-Weil: ``None`` if a coordinate repeats, otherwise
    (number of tail entries above the head, coordinates sorted decreasingly)."""
    flat = q.flatten()
    if len(set(flat.coords)) != len(flat.coords):
        return None
    degree = sum(1 for x in q.tail.coords if x > q.head)
    return degree, Weight(tuple(sorted(flat.coords, reverse=True)), flat.shifted)


@dataclass(frozen=True)
class Survivor:
    source: LSWord
    degree: int
    weight: Weight
    target: LSWord


def survivors(sc: SingularCharacter) -> list[Survivor]:
    """Relative objects with a non-zero direct image, matched to the orbit."""
    by_weight = {mu: w for w, mu in orbit_weights(sc).items()}
    out = []
    for src, q in relative_bgg(sc).objects:
        image = direct_image(q)
        if image is None:
            continue
        degree, mu = image
        if mu not in by_weight:
            raise InvariantViolation(f"direct image {mu} of {src} is not in the singular orbit")
        out.append(Survivor(src, degree, mu, by_weight[mu]))
    return out


def survivor_rule(sc: SingularCharacter, source: LSWord) -> tuple[int, LSWord] | None:
    """Closed-form survival pattern: ``(degree, target)`` or ``None``.

    First kind: ``0 d_1..d_{k-1} 1 d_{k+1}..d_{n-1}`` survives in degree
    #zeros(d_1..d_{k-1}) onto ``d_1..d_{k-1} 01 d_{k+1}..d_{n-1}``.  Second kind:
    everything survives in degree #zeros(tail) onto ``tail 0``.
    """
    t = tail_word(source).bits
    k = sc.k
    if sc.kind == SECOND:
        return t.count(0), LSWord(t + (0,))
    if t[k - 1] != 1:
        return None
    head = t[: k - 1]
    return head.count(0), LSWord(head + (0, 1) + t[k:])


# --------------------------------------------------------------------------
# first page


@dataclass
class SpectralPage:
    """E_1 entries keyed by ``(p, q)``; each cell lists ``(weight, source)``
    (a cell may hold a direct sum).  ``arrows`` are d_1 differentials given
    by their source words, always from ``(p, q)`` to ``(p + 1, q)``."""

    n: int
    k: int
    entries: dict[tuple[int, int], list[tuple[Weight, LSWord]]]
    arrows: list[tuple[LSWord, LSWord]]
    position: dict[LSWord, tuple[int, int]] = field(default_factory=dict)

    @property
    def max_p(self) -> int:
        return (self.n - 1) * self.n // 2

    @property
    def max_q(self) -> int:
        # first kind: degree counts zeros among d_1..d_{k-1}
        return self.n - 1 if self.k == self.n else self.k - 1

    def positional_arrows(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return [(self.position[a], self.position[b]) for a, b in self.arrows]

    def grid(self) -> list[list[list[Weight]]]:
        """Rows from ``q = max_q`` down to 0, columns ``p = 0..max_p``."""
        return [
            [[mu for mu, _ in self.entries.get((p, q), [])] for p in range(self.max_p + 1)]
            for q in range(self.max_q, -1, -1)
        ]


def spectral_first_page(sc: SingularCharacter) -> SpectralPage:
    alive = {s.source: s for s in survivors(sc)}
    entries: dict[tuple[int, int], list[tuple[Weight, LSWord]]] = defaultdict(list)
    position = {}
    for src, s in sorted(alive.items(), key=lambda item: (ls_length(tail_word(item[0])), item[0])):
        pq = (ls_length(tail_word(src)), s.degree)
        entries[pq].append((s.weight, src))
        position[src] = pq
    arrows = [
        (a, b)
        for a, b in relative_bgg(sc).arrows
        if a in alive and b in alive and alive[a].degree == alive[b].degree
    ]
    return SpectralPage(sc.n, sc.k, dict(entries), arrows, position)


def spectral_differentials(sc: SingularCharacter) -> set[tuple[LSWord, LSWord]]:
    """d_1 arrows transported to orbit words."""
    target = {s.source: s.target for s in survivors(sc)}
    return {(target[a], target[b]) for a, b in spectral_first_page(sc).arrows}


# --------------------------------------------------------------------------
# non-standard arrows and orders


def nonstandard_arrows(sc: SingularCharacter) -> list[tuple[LSWord, LSWord]]:
    """Bit patterns of the non-standard operators.

    First kind, 2 <= k <= n-2: ``..0 01 1..`` to ``..1 01 0..`` (digits k-1..k+2);
    k = n-1: ``..0 01`` to ``..1 01``;  second kind: ``..00 0`` to ``..11 0``.
    k = 1 admits no pattern.
    """
    n, k = sc.n, sc.k
    out = []
    for w in singular_hasse(n, k):
        b = w.bits
        if sc.kind == SECOND:
            if n >= 3 and b[n - 3 :] == (0, 0, 0):
                out.append((w, w.replace(n - 2, (1, 1, 0))))
        elif 2 <= k <= n - 2:
            if b[k - 2 : k + 2] == (0, 0, 1, 1):
                out.append((w, w.replace(k - 1, (1, 0, 1, 0))))
        elif k == n - 1 and k >= 2:
            if b[k - 2 :] == (0, 0, 1):
                out.append((w, w.replace(k - 1, (1, 0, 1))))
    return out


def conformal_weight(weight: Weight) -> Fraction:
    """Scalar of the grading element: ``2 <lambda, omega_n> / <alpha_n, alpha_n>``."""
    if weight.shifted:
        raise ValueError("conformal weight is defined on unshifted weights")
    n = weight.n
    omega = (1,) * n
    alpha = simple_root(n, n).vector(n)
    return 2 * inner(weight.coords, omega) / inner(alpha, alpha)


def operator_order(src: Weight, dst: Weight) -> int:
    """Order of an invariant operator from ``src`` to ``dst`` (conformal weight drop)."""
    a = src.unshift() if src.shifted else src
    b = dst.unshift() if dst.shifted else dst
    diff = conformal_weight(a) - conformal_weight(b)
    if diff <= 0 or diff.denominator != 1:
        raise ValueError(f"no operator {src} -> {dst}: conformal weight difference {diff}")
    return int(diff)


# --------------------------------------------------------------------------
# the complex


@dataclass
class SingularBGGComplex:
    character: SingularCharacter
    parity: str | None
    graph: HasseGraph
    grading: dict[LSWord, int]
    witness: dict[LSWord, LSWord]

    @property
    def kind(self) -> str:
        return self.character.kind

    @property
    def rank(self) -> int:
        """Rank of the regular Hasse diagram this complex is shaped like."""
        return self.character.n - 2


def _orbit_words(sc: SingularCharacter, parity: str | None) -> list[LSWord]:
    if sc.kind == SECOND:
        if parity not in (EVEN, ODD):
            raise ValueError("second-kind complexes need parity 'even' or 'odd'")
        return parity_class(sc.n, parity)
    if parity is not None:
        raise ValueError("parity only applies to second-kind characters")
    return singular_hasse(sc.n, sc.k)


def assemble_complex(sc: SingularCharacter, parity: str | None = None) -> SingularBGGComplex:
    if sc.n < 2:
        raise ValueError("singular BGG complexes need rank at least 2")
    words = _orbit_words(sc, parity)
    keep = set(words)
    weights = orbit_weights(sc)
    regular = regular_hasse(sc.n, with_weights=False)

    standard = {(a.src, a.dst): a.label for a in regular.arrows if a.src in weights and a.dst in weights}
    if set(standard) != spectral_differentials(sc):
        raise InvariantViolation("restricted Hasse arrows disagree with the first-page differentials")

    grading = {w: ls_length(collapse(w, sc.k)) for w in words}
    arrows = []
    for (a, b), label in sorted(standard.items()):
        if a in keep and b in keep:
            arrows.append(Arrow(a, b, label, STANDARD, operator_order(weights[a], weights[b])))
    for a, b in nonstandard_arrows(sc):
        if a in keep and b in keep:
            arrows.append(Arrow(a, b, None, NON_STANDARD, operator_order(weights[a], weights[b])))
        elif a in keep or b in keep:
            raise InvariantViolation(f"non-standard arrow {a} -> {b} crosses parity classes")

    order = sorted(words, key=lambda w: (grading[w], w))
    level_index: dict[int, int] = defaultdict(int)
    nodes = []
    for w in order:
        nodes.append(Node(w, weights[w], (grading[w], level_index[grading[w]])))
        level_index[grading[w]] += 1
    graph = HasseGraph(nodes, arrows)

    witness = {w: collapse(w, sc.k) for w in words}
    if not is_isomorphism(witness, graph, regular_hasse(sc.n - 2, with_weights=False)):
        raise InvariantViolation(f"collapse is not a graph isomorphism for n={sc.n}, k={sc.k}, parity={parity}")
    return SingularBGGComplex(sc, parity, graph, grading, witness)


def complex_parities(sc: SingularCharacter) -> list[str | None]:
    return [EVEN, ODD] if sc.kind == SECOND else [None]


def _middles(graph: HasseGraph) -> dict[tuple[LSWord, LSWord], set[LSWord]]:
    succ: dict[LSWord, set[LSWord]] = defaultdict(set)
    for a, b in graph.edge_set():
        succ[a].add(b)
    out: dict[tuple[LSWord, LSWord], set[LSWord]] = defaultdict(set)
    for a in list(succ):
        for b in succ[a]:
            for c in succ.get(b, ()):
                out[(a, c)].add(b)
    return out


def count_squares(graph: HasseGraph) -> int:
    return sum(1 for mids in _middles(graph).values() if len(mids) == 2)


def check_cochain(cx: SingularBGGComplex) -> bool:
    """Graded shadow of d^2 = 0: arrows raise degree by one, and every
    two-step path spans the same one- or two-path interval as its image in
    the regular rank n-2 diagram."""
    for a in cx.graph.arrows:
        if cx.grading.get(a.dst) != cx.grading.get(a.src, -2) + 1:
            return False
    f = cx.witness
    regular = regular_hasse(cx.rank, with_weights=False)
    reg_mid = _middles(regular)
    mapped = {(f[a], f[c]): {f[b] for b in mids} for (a, c), mids in _middles(cx.graph).items()}
    if any(len(mids) not in (1, 2) for mids in mapped.values()):
        return False
    return mapped == dict(reg_mid)


# --------------------------------------------------------------------------
# degree diagrams


@dataclass(frozen=True)
class DegreeDiagram:
    """Relative BGG positions (tail words of rank n-1) with surviving
    degrees, first-page arrows (solid) and non-standard arrows (dashed)."""

    character: SingularCharacter
    degrees: dict[LSWord, int | None]
    solid: list[tuple[LSWord, LSWord]]
    dashed: list[tuple[LSWord, LSWord]]


def degree_diagram(sc: SingularCharacter) -> DegreeDiagram:
    alive = {s.source: s for s in survivors(sc)}
    degrees = {}
    for t in all_words(sc.n - 1):
        s = alive.get(LSWord((0,) + t.bits))
        degrees[t] = None if s is None else s.degree
    source_of = {s.target: s.source for s in alive.values()}
    solid = [(tail_word(a), tail_word(b)) for a, b in spectral_first_page(sc).arrows]
    dashed = [(tail_word(source_of[a]), tail_word(source_of[b])) for a, b in nonstandard_arrows(sc)]
    return DegreeDiagram(sc, degrees, solid, dashed)


def parity_label(w: LSWord) -> str:
    return parity_of(w)
