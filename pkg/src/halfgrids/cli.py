"""Command-line interface.

Exit codes: 0 success, 1 domain error (incompatible pair, bad permutation,
...), 2 malformed input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import linkdiag, linkgroup, verify
from .dyadic import parse_partition
from .errors import HalfGridError, Incompatible, ParseError
from .halfgrid import (
    GridDiagram,
    HalfGrid,
    assemble,
    assemble_unoriented,
    format_grid,
    format_half_grid,
    half_grid_from_partition,
    is_compatible,
    parse_grid,
    parse_permutation,
    perm_decode,
    perm_encode,
    rotate90,
)
from .thompson import parse_pair, partition_from_tree


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    src = sub.add_argument_group("input source (exactly one)")
    src.add_argument("--trees", metavar="TOP|BOTTOM", help="tree pair, e.g. '(..)|(..)'")
    src.add_argument(
        "--partitions", nargs=2, metavar=("PLUS", "MINUS"),
        help="two comma-separated dyadic breakpoint lists",
    )
    src.add_argument(
        "--perms", nargs=2, metavar=("SIGMA_PLUS", "SIGMA_MINUS"),
        help="two one-line permutations of 1..2n",
    )
    src.add_argument("--grid", metavar="FILE", help="file holding a grid diagram line")


def _half_grids(args) -> tuple[HalfGrid, HalfGrid]:
    if args.trees is not None:
        pair = parse_pair(args.trees)
        return (
            half_grid_from_partition(partition_from_tree(pair.top)),
            half_grid_from_partition(partition_from_tree(pair.bottom)),
        )
    if args.partitions is not None:
        plus, minus = (parse_partition(text) for text in args.partitions)
        return half_grid_from_partition(plus), half_grid_from_partition(minus)
    if args.perms is not None:
        sp, sm = (parse_permutation(text) for text in args.perms)
        return perm_decode(sp), perm_decode(sm)
    raise AssertionError("unreachable: source checked earlier")


def _grid(args) -> GridDiagram:
    if args.grid is not None:
        try:
            with open(args.grid, encoding="utf-8") as fh:
                text = fh.read().strip()
        except OSError as exc:
            raise ParseError(f"cannot read {args.grid}: {exc}") from None
        return parse_grid(text)
    plus, minus = _half_grids(args)
    if getattr(args, "unoriented", False):
        return assemble_unoriented(plus, minus)
    return assemble(plus, minus)


def _check_one_source(args, parser) -> None:
    given = [
        name
        for name in ("trees", "partitions", "perms", "grid")
        if getattr(args, name, None) is not None
    ]
    if len(given) != 1:
        parser.error("exactly one input source is required "
                     "(--trees, --partitions, --perms or --grid)")


def cmd_build(args) -> int:
    if args.grid is not None:
        print(format_grid(_grid(args)))
        return 0
    plus, minus = _half_grids(args)
    print(f"plus:  {format_half_grid(plus)}")
    print(f"minus: {format_half_grid(minus)}")
    if is_compatible(plus, minus):
        print(f"grid:  {format_grid(assemble(plus, minus))}")
    elif args.unoriented:
        print(f"grid:  {format_grid(assemble_unoriented(plus, minus))}")
    else:
        raise Incompatible(
            "half grids are not compatible; pass --unoriented to stack anyway"
        )
    return 0


def cmd_render(args) -> int:
    g = _grid(args)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(linkdiag.render_svg(g))
        print(f"wrote {args.out}")
    else:
        print(linkdiag.render_ascii(g, ascii_only=args.ascii_only))
    return 0


def cmd_invariants(args) -> int:
    g = _grid(args)
    comps, cycles = linkdiag.components(g)
    print(f"size={g.size}")
    print(f"components={comps}")
    print("cycles=" + " ".join("(" + ",".join(map(str, c)) + ")" for c in cycles))
    xs = linkdiag._crossing_positions(g)
    print(f"crossings={len(xs)}")
    if g.oriented:
        stats = linkdiag.front_stats(g)
        circles, euler = linkdiag.seifert_stats(g)
        print(f"writhe={stats.writhe}")
        print(f"cusps={stats.cusps} (up={stats.up_cusps}, down={stats.down_cusps})")
        print(f"tb={stats.tb}")
        print(f"rot={stats.rot}")
        print(f"seifert_circles={circles}")
        print(f"seifert_euler={euler}")
    if len(xs) <= linkdiag.BRACKET_CAP:
        print(f"bracket={linkdiag.kauffman_bracket(g.unoriented())}")
    else:
        print(f"bracket=skipped ({len(xs)} crossings exceed cap {linkdiag.BRACKET_CAP})")
    return 0


def cmd_group(args) -> int:
    if args.grid is not None:
        pres = linkgroup.grid_presentation(_grid(args))
    else:
        plus, minus = _half_grids(args)
        pres = linkgroup.half_grid_presentation(perm_encode(plus), perm_encode(minus))
    if args.gap:
        sys.stdout.write(linkgroup.format_presentation_gap(pres))
    else:
        print(linkgroup.format_presentation(pres))
        free_rank, torsion = linkgroup.abelianization(pres)
        torsion_text = ",".join(map(str, torsion)) or "none"
        print(f"abelianization: free rank {free_rank}, torsion {torsion_text}")
    return 0


def cmd_encode(args) -> int:
    plus, minus = _half_grids(args)
    print(f"sigma_plus:  {perm_encode(plus)}")
    print(f"sigma_minus: {perm_encode(minus)}")
    return 0


def cmd_verify(args) -> int:
    report = verify.verify_suite(args.max_leaves)
    print(report.format())
    return 0 if report.ok else 3


def cmd_export(args) -> int:
    g = _grid(args)
    if args.rotate90:
        g = rotate90(g)
    print(format_grid(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfgrids",
        description="half grid diagrams, grid diagrams and their link invariants",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("build", help="construct half grids and the stacked grid")
    _add_source_args(sub)
    sub.add_argument("--unoriented", action="store_true",
                     help="stack incompatible halves as an unoriented grid")
    sub.set_defaults(func=cmd_build)

    sub = subs.add_parser("render", help="draw the diagram (ASCII or SVG)")
    _add_source_args(sub)
    sub.add_argument("--unoriented", action="store_true")
    sub.add_argument("--ascii-only", action="store_true",
                     help="7-bit characters only")
    sub.add_argument("--out", metavar="FILE", help="write SVG here instead")
    sub.set_defaults(func=cmd_render)

    sub = subs.add_parser("invariants", help="components, writhe, tb/rot, bracket, ...")
    _add_source_args(sub)
    sub.add_argument("--unoriented", action="store_true")
    sub.set_defaults(func=cmd_invariants)

    sub = subs.add_parser("group", help="link group presentation")
    _add_source_args(sub)
    sub.add_argument("--gap", action="store_true",
                     help="emit a finitely-presented-group text form")
    sub.set_defaults(func=cmd_group)

    sub = subs.add_parser("encode", help="half grids as one-line permutations")
    _add_source_args(sub)
    sub.set_defaults(func=cmd_encode)

    sub = subs.add_parser("verify", help="run the enumeration checks")
    sub.add_argument("--max-leaves", type=int, default=5, metavar="N",
                     help="tree size bound, 1..8 (default 5)")
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("export", help="print the grid in parseable text form")
    _add_source_args(sub)
    sub.add_argument("--unoriented", action="store_true")
    sub.add_argument("--rotate90", action="store_true",
                     help="rotate to the rows-O-to-X convention first")
    sub.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        _check_one_source(args, parser)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HalfGridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
