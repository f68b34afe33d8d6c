"""``bgg`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys

from . import render
from .diffop import DimensionError, det_operator, operator_d, surjectivity_rank
from .lsword import regular_hasse
from .orbit import (
    EVEN,
    FIRST,
    ODD,
    SECOND,
    SingularCharacter,
    minimal_semiregular,
    orbit_weights,
    singular_hasse,
)
from .penrose import (
    InvariantViolation,
    assemble_complex,
    degree_diagram,
    spectral_first_page,
)
from .verify import FAMILIES, run_all
from .weyl import Weight

MAX_RENDER_RANK = 10

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _character(args) -> SingularCharacter:
    if args.weight:
        sc = SingularCharacter.from_weight(Weight.parse(args.weight, shifted=True))
        if args.rank is not None and args.rank != sc.n:
            raise UsageError(f"--rank {args.rank} does not match the weight {sc.lambda_plus_rho}")
        if args.k is not None and args.k != sc.k:
            raise UsageError(f"--k {args.k} does not match the singular root of {sc.lambda_plus_rho}")
        return sc
    if args.rank is None or args.k is None:
        raise UsageError("give --rank and --k, or --weight")
    return minimal_semiregular(args.rank, args.k)


def cmd_hasse(args) -> str:
    if args.rank is None:
        raise UsageError("hasse needs --rank")
    if not 0 <= args.rank <= MAX_RENDER_RANK:
        raise UsageError(f"hasse renders ranks 0..{MAX_RENDER_RANK}, got {args.rank}")
    return render.render_hasse(regular_hasse(args.rank), args.rank, args.format)


def cmd_orbit(args) -> str:
    sc = _character(args)
    keep = orbit_weights(sc)
    graph = regular_hasse(sc.n, with_weights=False).induced(singular_hasse(sc.n, sc.k))
    assert set(graph.words()) == set(keep)
    return render.render_orbit(sc, graph, args.format, crossed=args.crossed)


def cmd_spectral(args) -> str:
    sc = _character(args)
    if args.degrees_only:
        return render.render_degrees(degree_diagram(sc), args.format)
    return render.render_spectral(spectral_first_page(sc), sc, args.format)


def cmd_complex(args) -> str:
    sc = _character(args)
    if sc.kind == SECOND and args.parity is None:
        raise UsageError("second-kind characters need --parity even|odd")
    if sc.kind == FIRST and args.parity is not None:
        raise UsageError("--parity only applies when k = n")
    return render.render_complex(assemble_complex(sc, args.parity), args.format)


def cmd_verify(args) -> tuple[str, int]:
    families = args.family or None
    results = run_all(args.max_rank, families)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = render.json_document(
            {
                "kind": "verify",
                "max_rank": args.max_rank,
                "passed": ok,
                "families": [
                    {"family": r.family, "passed": r.passed, "checked": r.checked, "counterexample": r.counterexample}
                    for r in results
                ],
            }
        )
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.family} ({r.checked} checks)"
            if r.counterexample:
                line += " counterexample=" + json.dumps(r.counterexample, sort_keys=True)
            lines.append(line)
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_diffop(args) -> tuple[str, int]:
    d = operator_d()
    if args.check == "print":
        if args.format == "json":
            return render.json_document({"kind": "operator", "operator": d.to_json(), "text": str(d)}), EXIT_OK
        return str(d) + "\n", EXIT_OK
    lines, ok, report = [], True, {}
    if args.check == "identity":
        same = det_operator(3).scale(4) == d
        ok = same
        lines.append(f"D = {d}")
        lines.append(f"4*det = D: {'PASS' if same else 'FAIL'}")
        report = {"identity": same}
    else:
        degrees = [args.degree] if args.degree is not None else [0, 1, 2, 3]
        rows = []
        for deg in degrees:
            try:
                r, dim = surjectivity_rank(d, deg)
            except DimensionError as exc:
                raise UsageError(str(exc)) from exc
            full = r == dim
            ok = ok and full
            rows.append({"degree": deg, "rank": r, "target_dim": dim, "full_rank": full})
            lines.append(f"degree {deg}: rank {r} / {dim}: {'PASS' if full else 'FAIL'}")
        report = {"surjectivity": rows}
    if args.format == "json":
        return render.json_document({"kind": "diffop", "check": args.check, "passed": ok, **report}), (
            EXIT_OK if ok else EXIT_FAIL
        )
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bgg", description="Singular BGG complexes for the Lagrangian Grassmannian.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, character=True):
        p.add_argument("--format", choices=render.FORMATS, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")
        if character:
            p.add_argument("--rank", "-n", type=int)
            p.add_argument("--k", type=int, help="index of the singular simple root")
            p.add_argument("--weight", help="lambda+rho, e.g. '[3,2,1,1]' (overrides the minimal character)")
        return p

    p = common(sub.add_parser("hasse", help="regular Hasse diagram"), character=False)
    p.add_argument("--rank", "-n", type=int)
    p = common(sub.add_parser("orbit", help="singular orbit with standard arrows"))
    p.add_argument("--crossed", action="store_true", help="also list crossed-out W^p words")
    p = common(sub.add_parser("spectral", help="first page of the spectral sequence"))
    p.add_argument("--degrees-only", action="store_true")
    p = common(sub.add_parser("complex", help="singular BGG complex"))
    p.add_argument("--parity", choices=(EVEN, ODD))
    p = common(sub.add_parser("verify", help="run the oracle suites"), character=False)
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--family", action="append", choices=list(FAMILIES))
    p = common(sub.add_parser("diffop", help="the explicit order-3 operator"), character=False)
    p.add_argument("--check", choices=("print", "identity", "surjectivity"), default="print")
    p.add_argument("--degree", type=int)
    return parser


COMMANDS = {
    "hasse": cmd_hasse,
    "orbit": cmd_orbit,
    "spectral": cmd_spectral,
    "complex": cmd_complex,
    "verify": cmd_verify,
    "diffop": cmd_diffop,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"bgg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"bgg {args.command}: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
