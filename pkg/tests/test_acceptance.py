"""One test per acceptance criterion, each at its stated tolerance."""

from __future__ import annotations

import time
from pathlib import Path

import pytest
import reference_data as ref

from singular_bgg.cli import main
from singular_bgg.diffop import det_operator, operator_d, surjectivity_rank
from singular_bgg.lsword import (
    NON_STANDARD,
    all_words,
    is_isomorphism,
    ls_act,
    ls_length,
    ls_to_diagram,
    ls_to_weyl,
    regular_hasse,
)
from singular_bgg.orbit import (
    FIRST,
    SingularCharacter,
    minimal_semiregular,
    orbit_weights,
    singular_hasse,
)
from singular_bgg.penrose import (
    assemble_complex,
    check_cochain,
    complex_parities,
    degree_diagram,
    nonstandard_arrows,
    spectral_first_page,
)
from singular_bgg.weyl import Weight, act, hasse_bruteforce, length, min_coset_reps

GOLDEN = Path(__file__).parent / "golden"


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def _character(text):
    return SingularCharacter.from_weight(Weight.parse(text, shifted=True))


def _weight_arrows(sc):
    weights = orbit_weights(sc)
    keep = set(weights)
    return {
        (str(weights[a]), str(weights[b]))
        for a, b in regular_hasse(sc.n, with_weights=False).edge_set()
        if a in keep and b in keep
    }


@pytest.mark.criterion("regular Hasse diagram rank 4 (16 nodes, golden file, < 1 s)")
def test_regular_hasse_rank4(capsys):
    with Timer() as t:
        assert main(["hasse", "--rank", "4"]) == 0
        out = capsys.readouterr().out
        g = regular_hasse(4)
        by_word = {str(nd.word): nd for nd in g.nodes}
        for row in ref.REGULAR_RANK4_LAYOUT:
            for w, rows, weight in row:
                assert str(by_word[w].weight) == weight
                assert ls_to_diagram(by_word[w].word).ydiagram() == rows
        assert len(by_word) == 16
        assert {(str(a.src), str(a.dst)) for a in g.arrows} == ref.REGULAR_RANK4_ARROWS
    assert out == (GOLDEN / "hasse_rank4.txt").read_text(encoding="utf-8")
    assert t.seconds < 1.0


@pytest.mark.criterion("singular orbits [3,2,1,1] and [3,2,1,0] (< 1 s)")
def test_singular_orbits_rank4():
    with Timer() as t:
        a, b = _character("[3,2,1,1]"), _character("[3,2,1,0]")
        assert {str(w): str(mu) for w, mu in orbit_weights(a).items()} == ref.ORBIT_3211
        assert {str(w): str(mu) for w, mu in orbit_weights(b).items()} == ref.ORBIT_3210
        assert _weight_arrows(a) == ref.ORBIT_3211_ARROWS
        assert _weight_arrows(b) == ref.ORBIT_3210_ARROWS
    assert t.seconds < 1.0


def _grid(page):
    return [[" + ".join(str(mu) for mu in cell) or "0" for cell in row] for row in page.grid()]


@pytest.mark.criterion("first spectral pages for [3,2,1,1] and [3,2,1,0] (exact, < 1 s)")
def test_first_pages_rank4():
    with Timer() as t:
        for text, rows, arrows, nonstd in [
            ("[3,2,1,1]", ref.PAGE_3211_ROWS, ref.PAGE_3211_ARROWS, ref.PAGE_3211_NONSTANDARD),
            ("[3,2,1,0]", ref.PAGE_3210_ROWS, ref.PAGE_3210_ARROWS, ref.PAGE_3210_NONSTANDARD),
        ]:
            sc = _character(text)
            page = spectral_first_page(sc)
            assert _grid(page) == rows
            assert set(page.positional_arrows()) == arrows
            weights = orbit_weights(sc)
            assert {(str(weights[x]), str(weights[y])) for x, y in nonstandard_arrows(sc)} == nonstd
    assert t.seconds < 1.0


@pytest.mark.criterion("rank-5 degree diagrams, k = 1..5 (exact, < 1 s)")
def test_degree_diagrams_rank5():
    with Timer() as t:
        for k, expected in ref.DEGREE_DIAGRAMS_RANK5.items():
            dd = degree_diagram(minimal_semiregular(5, k))
            got = {str(w): d for w, d in dd.degrees.items() if d is not None}
            assert got == expected["degrees"], k
            assert {(str(a), str(b)) for a, b in dd.solid} == expected["solid"], k
            assert {(str(a), str(b)) for a, b in dd.dashed} == expected["dashed"], k
    assert t.seconds < 1.0


def _all_complexes(hi=8):
    for n in range(3, hi + 1):
        for k in range(1, n + 1):
            sc = minimal_semiregular(n, k)
            for parity in complex_parities(sc):
                yield sc, parity


@pytest.mark.criterion("complex isomorphic to regular rank n-2 diagram, 3 <= n <= 8 (< 30 s)")
def test_complex_isomorphism():
    with Timer() as t:
        count = 0
        for sc, parity in _all_complexes():
            cx = assemble_complex(sc, parity)
            assert is_isomorphism(cx.witness, cx.graph, regular_hasse(sc.n - 2, with_weights=False))
            count += 1
        assert count == sum(n + 1 for n in range(3, 9))
    assert t.seconds < 30.0


@pytest.mark.criterion("oracle equivalence for n <= 6 (< 60 s)")
def test_oracle_equivalence():
    with Timer() as t:
        for n in range(1, 7):
            words = all_words(n)
            images = {ls_to_weyl(w): w for w in words}
            assert set(images) == hasse_bruteforce(n)
            generic = Weight(tuple(5 * i - 2 for i in range(n, 0, -1)), True)
            for g, w in images.items():
                assert length(g) == ls_length(w)
                assert ls_act(w, generic) == act(g, generic)
            for k in range(1, n + 1):
                assert {ls_to_weyl(w) for w in singular_hasse(n, k)} == min_coset_reps(n, {k})
    assert t.seconds < 60.0


@pytest.mark.criterion("operator orders 1 / 2 / 3 on minimal characters, n <= 8")
def test_operator_orders():
    seen = set()
    for sc, parity in _all_complexes():
        for a in assemble_complex(sc, parity).graph.arrows:
            want = (2 if sc.kind == FIRST else 3) if a.kind == NON_STANDARD else 1
            assert a.order == want, (sc, parity, a)
            seen.add((a.kind, a.order))
    assert seen == {("standard", 1), (NON_STANDARD, 2), (NON_STANDARD, 3)}


@pytest.mark.criterion("explicit operator: 4 det = D, full rank for d <= 3, cochain check n <= 8 (< 5 s)")
def test_explicit_operator_and_cochain():
    with Timer() as t:
        assert det_operator(3).scale(4) == operator_d()
        for d in range(4):
            r, dim = surjectivity_rank(operator_d(), d)
            assert r == dim
    assert t.seconds < 5.0
    for sc, parity in _all_complexes():
        assert check_cochain(assemble_complex(sc, parity))
