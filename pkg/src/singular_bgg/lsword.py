"""LS words, generalized Young diagrams and regular Hasse diagrams.

An element of W^p for the Lagrangian parabolic is encoded as a binary word
``d_1 ... d_n`` (most significant first).  The ones mark the coordinates of
rho that turn negative.  The generalized Young diagram of a word lives in a
staircase whose row ``r`` (top to bottom) holds the roots
``c_{r,n}, c_{r,n-1}, ..., c_{r,r} = b_r`` from left to right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .weyl import (
    Root,
    Weight,
    WeylElement,
    reflection,
    rho_weight,
)

STANDARD = "standard"
NON_STANDARD = "non-standard"


@dataclass(frozen=True, order=True)
class LSWord:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"LS word bits must be 0/1, got {self.bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> LSWord:
        return cls(tuple(int(ch) for ch in text.strip()))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, idx):
        return self.bits[idx]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def ones_positions(self) -> tuple[int, ...]:
        """1-based positions of the digit 1, increasing."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    def popcount(self) -> int:
        return sum(self.bits)

    def replace(self, start: int, new: Sequence[int]) -> LSWord:
        """Overwrite bits from 1-based position ``start`` on."""
        bits = list(self.bits)
        bits[start - 1 : start - 1 + len(new)] = new
        return LSWord(tuple(bits))

    def __add__(self, other: LSWord) -> LSWord:
        return LSWord(self.bits + other.bits)


def word(text: str) -> LSWord:
    return LSWord.parse(text)


def all_words(n: int) -> list[LSWord]:
    """All 2^n words in lexicographic order."""
    return [LSWord(tuple((m >> (n - 1 - i)) & 1 for i in range(n))) for m in range(2**n)]


def ls_length(w: LSWord) -> int:
    """Length of the corresponding W^p element: ``(n+1) k - sum of positions of ones``."""
    ones = w.ones_positions()
    return (w.n + 1) * len(ones) - sum(ones)


# --------------------------------------------------------------------------
# generalized Young diagrams


def staircase_root(n: int, row: int, col: int) -> Root:
    """Root sitting at 1-based (row, col) of the rank-n staircase."""
    if not (1 <= row <= n and 1 <= col <= n + 1 - row):
        raise ValueError(f"({row}, {col}) is outside the rank {n} staircase")
    return Root.c(row, n + 1 - col)


def staircase_position(n: int, root: Root) -> tuple[int, int]:
    if root.kind == "A":
        raise ValueError(f"{root} is not a nilradical root")
    return root.i, n + 1 - root.j


def is_admissible(n: int, boxes: Iterable[Root]) -> bool:
    """Closure test: ``c_ij in S`` forces every ``c_kl`` with ``k >= i``,
    ``l >= j`` and ``k <= l <= n`` into S (``c_ii`` meaning ``b_i``).
    """
    boxes = set(boxes)
    for r in boxes:
        if r.kind == "A" or r.j > n:
            return False
        for k in range(r.i, n + 1):
            for l in range(max(k, r.j), n + 1):
                if Root.c(k, l) not in boxes:
                    return False
    return True


@dataclass(frozen=True)
class GenYoungDiagram:
    """Row lengths, top row first; row r has room for n + 1 - r boxes."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for r, length in enumerate(self.rows, start=1):
            if not 0 <= length <= n + 1 - r:
                raise ValueError(f"row {r} of length {length} overflows the rank {n} staircase")
        if not is_admissible(n, self.boxes()):
            raise ValueError(f"row lengths {self.rows} do not form an admissible set")

    @property
    def n(self) -> int:
        return len(self.rows)

    def boxes(self) -> frozenset[Root]:
        n = self.n
        return frozenset(
            staircase_root(n, r, c) for r, length in enumerate(self.rows, start=1) for c in range(1, length + 1)
        )

    @classmethod
    def from_boxes(cls, n: int, boxes: Iterable[Root]) -> GenYoungDiagram:
        boxes = frozenset(boxes)
        if not is_admissible(n, boxes):
            raise ValueError("box set violates the admissibility closure")
        rows = [0] * n
        for b in boxes:
            r, c = staircase_position(n, b)
            rows[r - 1] = max(rows[r - 1], c)
        diagram = cls(tuple(rows))
        if diagram.boxes() != boxes:
            raise ValueError("box set is not left-justified")
        return diagram

    def size(self) -> int:
        return sum(self.rows)

    def ydiagram(self) -> tuple[int, ...]:
        """Nonempty rows only, as drawn bottom-justified in the staircase."""
        return tuple(x for x in self.rows if x)

    def __str__(self) -> str:
        rows = self.ydiagram()
        return "{" + ",".join(map(str, rows)) + "}" if rows else "∅"


def ls_to_diagram(w: LSWord) -> GenYoungDiagram:
    """Trace the zig-zag: 1 steps right, 0 steps down; rows below the end
    point are full."""
    n = w.n
    rows = []
    x = 0
    for b in w.bits:
        if b:
            x += 1
        else:
            rows.append(x)
    k = w.popcount()
    rows += [n + 1 - r for r in range(n - k + 1, n + 1)]
    return GenYoungDiagram(tuple(rows))


def diagram_to_ls(d: GenYoungDiagram) -> LSWord:
    n = d.n
    bits: list[int] = []
    x = 0
    for r, length in enumerate(d.rows, start=1):
        if length == n + 1 - r:
            bits += [1] * (length - x)
            break
        if length < x:
            raise ValueError(f"row lengths {d.rows} are not a zig-zag boundary")
        bits += [1] * (length - x) + [0]
        x = length
    if len(bits) != n:
        raise ValueError(f"row lengths {d.rows} are not a zig-zag boundary")
    return LSWord(tuple(bits))


# --------------------------------------------------------------------------
# Weyl group elements and the action


def column_reflections(w: LSWord) -> list[list[Root]]:
    """Reflections of each column ``C_j``, listed in the order they act."""
    n = w.n
    columns = []
    for j, i_j in enumerate(w.ones_positions(), start=1):
        col = n + 1 - j
        refl = [Root.b(col)]
        refl += [Root.c(m, col) for m in range(n - j, i_j - j, -1)]
        columns.append(refl)
    return columns


def ls_to_weyl(w: LSWord) -> WeylElement:
    """Compose the column decomposition ``C_k o ... o C_1``."""
    n = w.n
    result = WeylElement.identity(n)
    for column in column_reflections(w):
        for root in column:
            result = reflection(root, n) * result
    return result


def ls_act(w: LSWord, mu: Weight) -> Weight:
    """Drop the coordinates at the ones, append their negatives in reverse."""
    if mu.n != w.n:
        raise ValueError(f"rank mismatch: word of length {w.n}, weight of length {mu.n}")
    ones = set(w.ones_positions())
    kept = [x for i, x in enumerate(mu.coords, start=1) if i not in ones]
    moved = [-mu.coords[i - 1] for i in sorted(ones, reverse=True)]
    return Weight(tuple(kept + moved), mu.shifted)


# --------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Node:
    word: LSWord
    weight: Weight | None = None
    pos: tuple[int, int] | None = None


@dataclass(frozen=True)
class Arrow:
    src: LSWord
    dst: LSWord
    label: Root | None = None
    kind: str = STANDARD
    order: int | None = None


@dataclass
class HasseGraph:
    nodes: list[Node]
    arrows: list[Arrow] = field(default_factory=list)

    def __post_init__(self) -> None:
        words = self.words()
        if len(set(words)) != len(words):
            raise ValueError("duplicate nodes")
        known = set(words)
        seen = set()
        for a in self.arrows:
            if a.src not in known or a.dst not in known:
                raise ValueError(f"arrow {a.src}->{a.dst} leaves the node set")
            key = (a.src, a.dst, a.kind)
            if key in seen:
                raise ValueError(f"duplicate arrow {a.src}->{a.dst} ({a.kind})")
            seen.add(key)

    def words(self) -> list[LSWord]:
        return [nd.word for nd in self.nodes]

    def node(self, w: LSWord) -> Node:
        for nd in self.nodes:
            if nd.word == w:
                return nd
        raise KeyError(str(w))

    def edge_set(self, kind: str | None = None) -> set[tuple[LSWord, LSWord]]:
        return {(a.src, a.dst) for a in self.arrows if kind is None or a.kind == kind}

    def successors(self, w: LSWord) -> list[LSWord]:
        return [a.dst for a in self.arrows if a.src == w]

    def induced(self, words: Iterable[LSWord]) -> HasseGraph:
        keep = set(words)
        return HasseGraph(
            [nd for nd in self.nodes if nd.word in keep],
            [a for a in self.arrows if a.src in keep and a.dst in keep],
        )


def is_isomorphism(f: dict, source: HasseGraph, target: HasseGraph) -> bool:
    """True iff ``f`` is a bijection on nodes carrying source arrows exactly
    onto target arrows (arrow kinds ignored)."""
    src_words = set(source.words())
    if set(f) != src_words:
        return False
    image = set(f.values())
    if len(image) != len(src_words) or image != set(target.words()):
        return False
    mapped = {(f[a], f[b]) for a, b in source.edge_set()}
    return len(mapped) == len(source.edge_set()) and mapped == target.edge_set()


def arrow_label(src: LSWord, dst: LSWord) -> Root:
    """Root of the box added along an arrow, read off the word change."""
    n = src.n
    diff = [i for i in range(n) if src[i] != dst[i]]
    if diff == [n - 1] and src[n - 1] == 0:
        row = n - src.popcount()
        return Root.b(row)
    if len(diff) == 2 and diff[1] == diff[0] + 1 and src[diff[0]] == 0 and src[diff[1]] == 1:
        i = diff[0]
        row = i + 1 - sum(src.bits[:i])
        ones_before = sum(src.bits[:i])
        return Root.c(row, n - ones_before)
    raise ValueError(f"{src} -> {dst} is not an arrow")


def word_successors(w: LSWord) -> Iterator[LSWord]:
    """Targets of the two rewrite rules: ``...01... -> ...10...`` and a
    trailing ``0 -> 1``."""
    n = w.n
    for i in range(n - 1):
        if w[i] == 0 and w[i + 1] == 1:
            yield w.replace(i + 1, (1, 0))
    if n and w[n - 1] == 0:
        yield w.replace(n, (1,))


def _layout(words: Sequence[LSWord]) -> dict[LSWord, tuple[int, int]]:
    levels: dict[int, list[LSWord]] = {}
    for w in sorted(words, key=lambda v: (ls_length(v), v)):
        levels.setdefault(ls_length(w), []).append(w)
    return {w: (row, col) for row, ws in levels.items() for col, w in enumerate(ws)}


def regular_hasse(n: int, with_weights: bool = True) -> HasseGraph:
    """The 2^n-node Hasse diagram; nodes carry their rho-orbit weights."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    words = sorted(all_words(n), key=lambda v: (ls_length(v), v))
    pos = _layout(words)
    r = rho_weight(n)
    nodes = [Node(w, ls_act(w, r) if with_weights else None, pos[w]) for w in words]
    arrows = [Arrow(w, v, arrow_label(w, v)) for w in words for v in word_successors(w)]
    return HasseGraph(nodes, arrows)


def relative_hasse_eta(n: int) -> HasseGraph:
    """Words ``0 d_1 ... d_{n-1}`` with the arrows they inherit."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    full = regular_hasse(n, with_weights=False)
    return full.induced(w for w in full.words() if w[0] == 0)


def relative_hasse_tau(n: int) -> list[tuple[WeylElement, Root | None]]:
    """The chain ``Id -a12-> . -a13-> ... -a1n-> .`` paired with incoming labels."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    w = WeylElement.identity(n)
    chain: list[tuple[WeylElement, Root | None]] = [(w, None)]
    for j in range(2, n + 1):
        root = Root.a(1, j)
        w = reflection(root, n) * w
        chain.append((w, root))
    return chain


@dataclass(frozen=True)
class InductiveSplit:
    parts: dict[str, list[LSWord]]
    cross_arrows: list[Arrow]


def inductive_split(n: int) -> InductiveSplit:
    """Split by the first two digits; cross arrows between the halves must
    all be ``01... -> 10...``."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    graph = regular_hasse(n, with_weights=False)
    parts = {p: [w for w in graph.words() if str(w).startswith(p)] for p in ("00", "01", "10", "11")}
    cross = [a for a in graph.arrows if a.src[0] != a.dst[0]]
    for a in cross:
        if str(a.src)[:2] != "01" or str(a.dst)[:2] != "10":
            raise AssertionError(f"unexpected cross arrow {a.src} -> {a.dst}")
    return InductiveSplit(parts, cross)
