"""Batch command-line interface: JSON documents on stdout, diagnostics on
stderr.  Exit codes: 0 success, 1 domain validation failure, 2 malformed input."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import (
    SingularityType,
    catalog_types,
    resolution_graph,
    mumford_presentation,
    simplified_presentation,
)
from .covers import (
    COVER_DEGREE_CAP,
    GermCover,
    beta,
    center_subgroup,
    construct_d4_from_belyi,
    enumerate_covers,
    validate_cover,
    verify_theorem2,
)
from .dessins import BelyiClass, BelyiTriple, classify, enumerate_belyi
from .errors import (
    AdeCoversError,
    InvalidType,
    MalformedGraph,
    UnknownGenerator,
)
from .fpgroups import evaluate_word
from .catalog import distinguished_words
from .perms import group_elements, is_central, is_semiregular

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MALFORMED = 2

# errors that mean the input could not even be parsed / resolved
_PARSE_ERRORS = (InvalidType, MalformedGraph, UnknownGenerator)

VERIFY_SUITES = ("theorem2", "centrality", "generation")
DEFAULT_VERIFY_INDEX = 9


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise _Malformed(f"cannot read {path}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Malformed(f"invalid JSON in {path}: {exc}")


class _Malformed(Exception):
    pass


def _parse_type(name: str) -> SingularityType:
    return SingularityType.parse(name)


def cmd_graph(args) -> int:
    g = resolution_graph(_parse_type(args.type))
    _emit(g.to_json())
    return EXIT_OK


def cmd_presentation(args) -> int:
    t = _parse_type(args.type)
    if args.form == "mumford":
        pres = mumford_presentation(resolution_graph(t))
    else:
        pres = simplified_presentation(t)
    _emit(pres.to_json())
    return EXIT_OK


def _cover_summary(cover: GermCover) -> dict:
    center = center_subgroup(cover)
    b = beta(cover)
    return {
        "images": {g: p.to_json() for g, p in sorted(cover.images.items())},
        "center": {
            "z": center.z.to_json(),
            "order": center.order,
            "block_count": center.block_count,
        },
        "beta": b.to_json(),
    }


def cmd_enumerate_covers(args) -> int:
    t = _parse_type(args.type)
    covers = enumerate_covers(t, args.degree, rational_only=args.rational_only)
    _emit(
        {
            "singularity": t.name,
            "degree": args.degree,
            "rational_only": args.rational_only,
            "count": len(covers),
            "covers": [_cover_summary(c) for c in covers],
        }
    )
    return EXIT_OK


def cmd_beta(args) -> int:
    cover = _load_cover(args.cover)
    b = beta(cover, strict=args.strict)
    _emit(b.to_json())
    return EXIT_OK


def _load_cover(path: str) -> GermCover:
    data = _read_json(path)
    try:
        cover = GermCover.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _Malformed(f"bad cover document: {exc}")
    problems = validate_cover(cover)
    if problems:
        for p in problems:
            print(f"invalid cover: {p}", file=sys.stderr)
        raise AdeCoversError("cover failed validation")
    return cover


def cmd_construct_d4(args) -> int:
    data = _read_json(args.dessin)
    try:
        triple = BelyiTriple.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _Malformed(f"bad dessin document: {exc}")
    cover = construct_d4_from_belyi(triple)
    _emit(cover.to_json())
    return EXIT_OK


def cmd_enumerate_dessins(args) -> int:
    classes = enumerate_belyi(
        args.degree, genus0_only=args.genus0_only, strict_bel3=args.strict_bel3
    )
    _emit(
        {
            "degree": args.degree,
            "genus0_only": args.genus0_only,
            "strict_bel3": args.strict_bel3,
            "count": len(classes),
            "classes": [
                {
                    "sigma0": c.sigma0.to_json(),
                    "sigma1": c.sigma1.to_json(),
                    "genus": c.genus,
                    "bel3": classify(c.triple) is BelyiClass.BEL3,
                    "cycle_types": [list(ct.parts) for ct in c.cycle_types],
                }
                for c in classes
            ],
        }
    )
    return EXIT_OK


def _suite_types(args):
    if args.types:
        return [_parse_type(name) for name in args.types.split(",")]
    return catalog_types(DEFAULT_VERIFY_INDEX)


def _run_centrality(t: SingularityType, degree: int) -> list[str]:
    violations = []
    for idx, cover in enumerate(enumerate_covers(t, degree)):
        center = center_subgroup(cover)
        if not is_central(center.z, list(cover.image_tuple())):
            violations.append(f"{t.name} d={degree} cover {idx}: center image not central")
        if not is_semiregular(center.z):
            violations.append(f"{t.name} d={degree} cover {idx}: center image not semiregular")
        if center.order * center.block_count != degree:
            violations.append(f"{t.name} d={degree} cover {idx}: |Z| does not divide degree")
    return violations


def _run_generation(t: SingularityType, degree: int) -> list[str]:
    if t.name == "A0":
        return []
    violations = []
    words = distinguished_words(t)
    for idx, cover in enumerate(enumerate_covers(t, degree)):
        gens = list(cover.image_tuple())
        full = group_elements(gens, degree=degree)
        sub_gens = [evaluate_word(words.e_word, cover.images, degree)]
        sub_gens += [evaluate_word(w, cover.images, degree) for w in words.gamma_words]
        sub = group_elements(sub_gens, degree=degree)
        if sub != full:
            violations.append(
                f"{t.name} d={degree} cover {idx}: e and its neighbors do not generate"
            )
    return violations


def cmd_verify(args) -> int:
    types = _suite_types(args)
    results = []
    all_violations = []
    for t in types:
        for degree in range(2, args.max_degree + 1):
            if args.suite == "theorem2":
                report = verify_theorem2(t, degree)
                violations = list(report.violations)
                count = len(report.checks)
            elif args.suite == "centrality":
                violations = _run_centrality(t, degree)
                count = len(enumerate_covers(t, degree))
            else:
                violations = _run_generation(t, degree)
                count = len(enumerate_covers(t, degree))
            results.append(
                {
                    "singularity": t.name,
                    "degree": degree,
                    "covers": count,
                    "violations": violations,
                }
            )
            all_violations.extend(violations)
    _emit(
        {
            "suite": args.suite,
            "max_degree": args.max_degree,
            "types": [t.name for t in types],
            "violations": all_violations,
            "passed": not all_violations,
            "results": results,
        }
    )
    return EXIT_OK if not all_violations else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adecovers",
        description="ADE germ covers, their local fundamental groups, and Belyi triples",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="resolution graph of a singularity type")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("presentation", help="local fundamental group presentation")
    p.add_argument("--type", required=True)
    p.add_argument("--form", choices=("mumford", "simplified"), default="simplified")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("enumerate-covers", help="cover classes of one type and degree")
    p.add_argument("--type", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rational-only", action="store_true")
    p.set_defaults(func=cmd_enumerate_covers)

    p = sub.add_parser("beta", help="Belyi datum of a cover file")
    p.add_argument("--cover", required=True, help="path to a cover JSON file, or -")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("construct-d4", help="degree-n^2 cover over a dessin file")
    p.add_argument("--dessin", required=True, help="path to a dessin JSON file, or -")
    p.set_defaults(func=cmd_construct_d4)

    p = sub.add_parser("enumerate-dessins", help="Belyi pair classes of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus0-only", action="store_true")
    p.add_argument("--strict-bel3", action="store_true")
    p.set_defaults(func=cmd_enumerate_dessins)

    p = sub.add_parser("verify", help="run a verification suite over the catalog")
    p.add_argument("--suite", choices=VERIFY_SUITES, required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--types", help="comma-separated type names (default: index <= 9)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Malformed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except AdeCoversError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
