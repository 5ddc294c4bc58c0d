"""Command-line front end.

All structured output is UTF-8 JSON (DOT export is plain text).  Exit codes:
0 success, 1 verification failure in report mode, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .atlas import RayAtlas, generate_atlas
from .cyclo import (
    CycloVector,
    InvalidInputError,
    KsForgeError,
    cyclo_from_json,
    parse_entry,
)
from .gadgets import (
    build_gadget4,
    build_gadget5,
    cabello18_hypergraph,
    forcing_check,
    peres24_hypergraph,
)
from .hypergraph import (
    ContextHypergraph,
    classify_contexts,
    enumerate_contexts,
    to_dot,
)
from .mubs import mubs3, mubs4, verify_family
from .report import run_report
from .states import brute_states, enumerate_states, states_to_json, verdicts
from .structures import NAMED_HYPERGRAPHS
from .cyclo import vector_to_json


def _parse_seed_spec(spec: str) -> set[int]:
    out: set[int] = set()
    for part in spec.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.update(range(int(lo), int(hi) + 1))
        elif part:
            out.add(int(part))
    if not out:
        raise InvalidInputError("empty seed specification")
    return out


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj, out_path: str | None, as_text: bool = False):
    text = obj if as_text else json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_hypergraph(args) -> ContextHypergraph:
    if getattr(args, "fixture", None):
        return NAMED_HYPERGRAPHS[args.fixture]()
    if not args.infile:
        raise InvalidInputError("provide --in PATH or --fixture NAME")
    return ContextHypergraph.from_json(_load_json(args.infile))


def _atlas_from_args(args) -> RayAtlas:
    if args.infile:
        return RayAtlas.from_json(_load_json(args.infile))
    return generate_atlas(_parse_seed_spec(args.seeds))


def _parse_center(text: str | None, dim: int) -> CycloVector:
    if text is None:
        return CycloVector([1] * dim)
    obj = json.loads(text)
    if not isinstance(obj, list):
        raise InvalidInputError("center must be a JSON array")
    entries = []
    for item in obj:
        if isinstance(item, str):
            entries.append(parse_entry(item))
        else:
            entries.append(cyclo_from_json(item))
    return CycloVector(entries)


def cmd_generate(args) -> int:
    atlas = generate_atlas(_parse_seed_spec(args.seeds))
    _emit(atlas.to_json(), args.out)
    return 0


def cmd_bases(args) -> int:
    atlas = _atlas_from_args(args)
    H = enumerate_contexts(atlas.rays, 3, meta={"seeds": sorted(atlas.seed_indices)})
    _emit(H.to_json(), args.out)
    return 0


def cmd_classify(args) -> int:
    atlas = _atlas_from_args(args)
    if not atlas.has_global_colors:
        raise InvalidInputError("classification requires the nine-seed atlas")
    H = enumerate_contexts(atlas.rays, 3)
    policies = ("first_claim", "strict") if args.policy == "both" else (args.policy,)
    out = {}
    for policy in policies:
        colors = (
            atlas.colors_first_claim if policy == "first_claim" else atlas.colors_strict
        )
        hist = classify_contexts(H, colors)
        out[policy] = {color.value: hist[color] for color in hist}
    _emit(out, args.out)
    return 0


def cmd_states(args) -> int:
    H = _load_hypergraph(args)
    solver = brute_states if args.brute else enumerate_states
    S = solver(H, include_free=args.include_free)
    _emit(states_to_json(S, with_states=not args.no_states), args.out)
    return 0


def cmd_tifs(args) -> int:
    H = _load_hypergraph(args)
    S = enumerate_states(H)
    rep = verdicts(S)
    _emit({"count": rep.count, "tifs": [list(p) for p in rep.tifs]}, args.out)
    return 0


def cmd_gadget(args) -> int:
    center = _parse_center(args.center, args.dim)
    build = build_gadget4 if args.dim == 4 else build_gadget5
    gadget = build(center)
    full = gadget.hypergraph(constructed_only=False)
    obj = {
        "dimension": gadget.dimension,
        "center": vector_to_json(gadget.center),
        "vectors": {
            name: vector_to_json(vec) for name, vec in gadget.vectors.items()
        },
        "blocks": {name: list(members) for name, members in gadget.blocks.items()},
        "forcing": {
            "equations": [list(r) for r in forcing_check(args.dim).equations],
            "nullspace": [
                [str(x) for x in row]
                for row in forcing_check(args.dim).nullspace_primitive()
            ],
        },
        "all_cliques": len(full.edges),
    }
    _emit(obj, args.out)
    return 0


def cmd_peres24(args) -> int:
    _emit(peres24_hypergraph().to_json(), args.out)
    return 0


def cmd_cabello18(args) -> int:
    _emit(cabello18_hypergraph().to_json(), args.out)
    return 0


def cmd_mub(args) -> int:
    family = mubs3() if args.dim == 3 else mubs4()
    ver = verify_family(family)
    obj = {
        "dimension": family.dimension,
        "bases": {
            label: [vector_to_json(v) for v in vs]
            for label, vs in zip(family.labels, family.bases)
        },
        "verification": ver.to_json(),
    }
    _emit(obj, args.out)
    return 0


def cmd_report(args) -> int:
    card = run_report()
    if args.json:
        _emit(card.to_json(), args.out)
    else:
        _emit(card.to_text(), args.out, as_text=True)
    return 0 if card.overall else 1


def cmd_export(args) -> int:
    H = _load_hypergraph(args)
    if args.format == "json":
        _emit(H.to_json(), args.out)
        return 0
    colors = None
    if args.color_seeds:
        atlas = generate_atlas(range(1, 10))
        if set(H.vertices) <= set(r.id for r in atlas.rays):
            colors = atlas.colors_first_claim
    _emit(to_dot(H, style=args.dot_style, colors=colors), args.out, as_text=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ksforge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_out(sp):
        sp.add_argument("--out", help="write output to this path instead of stdout")

    sp = sub.add_parser("generate", help="generate a ray atlas from seeds")
    sp.add_argument("--seeds", default="1-9", help="e.g. 1-9 or 1,2,3")
    add_out(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("bases", help="enumerate the contexts of an atlas")
    sp.add_argument("--seeds", default="1-9")
    sp.add_argument("--in", dest="infile", help="atlas JSON (overrides --seeds)")
    add_out(sp)
    sp.set_defaults(func=cmd_bases)

    sp = sub.add_parser("classify", help="context color histogram")
    sp.add_argument("--seeds", default="1-9")
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--policy", choices=["first_claim", "strict", "both"], default="both")
    add_out(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("states", help="two-valued states of a hypergraph")
    sp.add_argument("--in", dest="infile", help="hypergraph JSON ('-' for stdin)")
    sp.add_argument("--fixture", choices=sorted(NAMED_HYPERGRAPHS))
    sp.add_argument("--brute", action="store_true", help="use the exhaustive oracle")
    sp.add_argument("--include-free", action="store_true")
    sp.add_argument("--no-states", action="store_true", help="suppress the state list")
    add_out(sp)
    sp.set_defaults(func=cmd_states)

    sp = sub.add_parser("tifs", help="state-derived exclusive pairs")
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--fixture", choices=sorted(NAMED_HYPERGRAPHS))
    add_out(sp)
    sp.set_defaults(func=cmd_tifs)

    sp = sub.add_parser("gadget", help="build a forcing gadget")
    sp.add_argument("--dim", type=int, choices=[4, 5], required=True)
    sp.add_argument("--center", help='JSON array, e.g. \'[1,1,1,1]\' or \'["1","w","w2"]\'')
    add_out(sp)
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("peres24", help="the 24-ray eigensystem hypergraph")
    add_out(sp)
    sp.set_defaults(func=cmd_peres24)

    sp = sub.add_parser("cabello18", help="the 18-ray KS hypergraph")
    add_out(sp)
    sp.set_defaults(func=cmd_cabello18)

    sp = sub.add_parser("mub", help="unbiased-basis family and verification")
    sp.add_argument("--dim", type=int, choices=[3, 4], required=True)
    add_out(sp)
    sp.set_defaults(func=cmd_mub)

    sp = sub.add_parser("report", help="run every headline check")
    sp.add_argument("--json", action="store_true")
    add_out(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("export", help="serialize a hypergraph (json or dot)")
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--fixture", choices=sorted(NAMED_HYPERGRAPHS))
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.add_argument("--dot-style", choices=["clique", "chain"], default="clique")
    sp.add_argument(
        "--color-seeds",
        action="store_true",
        help="color contexts by the nine-seed lineage when vertex ids match",
    )
    add_out(sp)
    sp.set_defaults(func=cmd_export)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except KsForgeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, FileNotFoundError, KeyError, ValueError) as err:
        print(f"error: malformed input ({err})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
