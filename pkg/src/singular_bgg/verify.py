"""Oracle suites behind ``bgg verify``.

Each family yields ``(case, got, expected)`` triples; a family passes when
every pair agrees.  Brute-force families stop at the enumeration caps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator

from .diffop import det_operator, operator_d, surjectivity_rank
from .lsword import (
    NON_STANDARD,
    all_words,
    diagram_to_ls,
    ls_act,
    ls_length,
    ls_to_diagram,
    ls_to_weyl,
)
from .orbit import FIRST, minimal_semiregular, singular_hasse
from .penrose import (
    InvariantViolation,
    assemble_complex,
    check_cochain,
    complex_parities,
    relative_bgg,
    survivor_rule,
    survivors,
)
from .weyl import (
    Weight,
    act,
    coset_cap,
    enum_cap,
    hasse_bruteforce,
    length,
    min_coset_reps,
    phi_set,
    rho_weight,
)

Case = tuple[str, object, object]

FAULT_ENV = "BGG_INJECT_FAULT"
FAULT = "<injected fault>"


@dataclass
class FamilyResult:
    family: str
    passed: bool
    checked: int
    counterexample: dict | None = None


def _hasse(max_rank: int) -> Iterator[Case]:
    for n in range(1, min(max_rank, enum_cap()) + 1):
        got = sorted(str(ls_to_weyl(w)) for w in all_words(n))
        yield f"n={n}", got, sorted(str(w) for w in hasse_bruteforce(n))


def _length(max_rank: int) -> Iterator[Case]:
    for n in range(1, min(max_rank, enum_cap()) + 1):
        for w in all_words(n):
            yield f"n={n} w={w}", ls_length(w), length(ls_to_weyl(w))


def _action(max_rank: int) -> Iterator[Case]:
    for n in range(1, min(max_rank, enum_cap()) + 1):
        generic = Weight(tuple(3 * i + 1 for i in range(n, 0, -1)), True)
        for w in all_words(n):
            for mu in (rho_weight(n), generic):
                yield f"n={n} w={w} mu={mu}", str(ls_act(w, mu)), str(act(ls_to_weyl(w), mu))


def _diagrams(max_rank: int) -> Iterator[Case]:
    for n in range(1, min(max_rank, enum_cap()) + 1):
        for w in all_words(n):
            d = ls_to_diagram(w)
            yield f"n={n} w={w} boxes", sorted(map(str, d.boxes())), sorted(map(str, phi_set(ls_to_weyl(w))))
            yield f"n={n} w={w} roundtrip", str(diagram_to_ls(d)), str(w)


def _cosets(max_rank: int) -> Iterator[Case]:
    for n in range(1, min(max_rank, coset_cap()) + 1):
        for k in range(1, n + 1):
            got = sorted(str(ls_to_weyl(w)) for w in singular_hasse(n, k))
            yield f"n={n} k={k}", got, sorted(str(w) for w in min_coset_reps(n, {k}))


def _survivors(max_rank: int) -> Iterator[Case]:
    for n in range(2, max_rank + 1):
        for k in range(1, n + 1):
            sc = minimal_semiregular(n, k)
            alive = {s.source: (s.degree, str(s.target)) for s in survivors(sc)}
            for w, _ in relative_bgg(sc).objects:
                rule = survivor_rule(sc, w)
                yield f"n={n} k={k} w={w}", alive.get(w), None if rule is None else (rule[0], str(rule[1]))


def _complexes(max_rank: int):
    for n in range(3, max_rank + 1):
        for k in range(1, n + 1):
            sc = minimal_semiregular(n, k)
            for parity in complex_parities(sc):
                yield f"n={n} k={k} parity={parity}", sc, parity


def _isomorphism(max_rank: int) -> Iterator[Case]:
    for case, sc, parity in _complexes(max_rank):
        try:
            assemble_complex(sc, parity)
            yield case, "isomorphic", "isomorphic"
        except InvariantViolation as exc:
            yield case, str(exc), "isomorphic"


def _orders(max_rank: int) -> Iterator[Case]:
    for case, sc, parity in _complexes(max_rank):
        cx = assemble_complex(sc, parity)
        nonstd = 2 if sc.kind == FIRST else 3
        for a in cx.graph.arrows:
            yield f"{case} {a.src}->{a.dst}", a.order, nonstd if a.kind == NON_STANDARD else 1


def _cochain(max_rank: int) -> Iterator[Case]:
    for case, sc, parity in _complexes(max_rank):
        yield case, check_cochain(assemble_complex(sc, parity)), True


def _operator(max_rank: int) -> Iterator[Case]:
    yield "4*det(3) = D", str(det_operator(3).scale(4)), str(operator_d())
    for d in range(4):
        r, dim = surjectivity_rank(operator_d(), d)
        yield f"rank of D at degree {d}", r, dim


FAMILIES: dict[str, Callable[[int], Iterator[Case]]] = {
    "hasse-bruteforce": _hasse,
    "length": _length,
    "action": _action,
    "diagrams": _diagrams,
    "singular-cosets": _cosets,
    "survivor-rule": _survivors,
    "complex-isomorphism": _isomorphism,
    "operator-orders": _orders,
    "cochain": _cochain,
    "operator-d": _operator,
}


def run_family(name: str, max_rank: int, inject: bool = False) -> FamilyResult:
    checked = 0
    for case, got, expected in FAMILIES[name](max_rank):
        if inject and checked == 0:
            expected = FAULT
        checked += 1
        if got != expected:
            return FamilyResult(name, False, checked, {"case": case, "got": _plain(got), "expected": _plain(expected)})
    return FamilyResult(name, True, checked)


def _plain(x):
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


def run_all(max_rank: int, families: list[str] | None = None) -> list[FamilyResult]:
    injected = {f.strip() for f in os.environ.get(FAULT_ENV, "").split(",") if f.strip()}
    return [run_family(name, max_rank, name in injected) for name in (families or list(FAMILIES))]
