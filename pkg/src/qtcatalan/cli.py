"""Command-line interface.

Subcommands: enumerate, stats, rankword, omega, poly, bijection,
transpose, verify.  Every command takes --format {text,json} and writes
deterministic output.  Exit codes: 0 success, 1 a verify property
failed, 2 bad usage or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, paths, qtpoly, rankwords, stats, verify


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _triple_obj(t: stats.StatTriple) -> dict[str, int]:
    return {"area": t.area, "skips": t.skips, "dinv": t.dinv}


def cmd_enumerate(args) -> int:
    words = [paths.render_path(p) for p in paths.enumerate_paths(args.m, args.n)]
    _emit(
        args,
        words,
        {"m": args.m, "n": args.n, "count": len(words), "paths": words},
    )
    return 0


def cmd_stats(args) -> int:
    p = paths.parse_path(args.path)
    obj = {
        "path": args.path,
        "m": p.m,
        "n": p.n,
        "area": stats.area(p),
        "dinv": stats.dinv(p),
    }
    lines = [
        f"m: {p.m}",
        f"n: {p.n}",
        f"area: {obj['area']}",
        f"dinv: {obj['dinv']}",
    ]
    if p.m == 3:
        word = rankwords.mark_from_path(p)
        obj["skips"] = stats.skips(p)
        obj["rank_word"] = rankwords.render_word(word)
        obj["boxed"] = sorted(word.boxed)
        lines.append(f"skips: {obj['skips']}")
        lines.append(f"rank word: {obj['rank_word']}")
    _emit(args, lines, obj)
    return 0


def _word_obj(word: rankwords.MarkedRankWord) -> dict:
    return {
        "n": word.n,
        "word": rankwords.render_word(word),
        "entries": [
            {"rank": e.rank, "color": e.color, "boxed": e.boxed}
            for e in word.entries
        ],
    }


def cmd_rankword(args) -> int:
    if args.target.isdigit():
        word = rankwords.lattice_rank_word(int(args.target))
    else:
        word = rankwords.mark_from_path(paths.parse_path(args.target))
    _emit(args, [rankwords.render_word(word)], _word_obj(word))
    return 0


def cmd_omega(args) -> int:
    word = rankwords.omega(args.area, args.skips, args.dinv)
    p = rankwords.path_from_word(word)
    obj = _word_obj(word)
    obj.update(area=args.area, skips=args.skips, dinv=args.dinv)
    obj["path"] = paths.render_path(p)
    _emit(args, [f"word: {obj['word']}", f"path: {obj['path']}"], obj)
    return 0


def cmd_poly(args) -> int:
    if args.method == "closed":
        if args.m != 3:
            raise ValueError(f"the closed form needs m = 3, got m = {args.m}")
        poly = qtpoly.catalan3_closed_form(args.n)
    else:
        poly = qtpoly.catalan_bruteforce(args.m, args.n)
    _emit(args, [poly.render()], poly.json_terms())
    return 0


def cmd_bijection(args) -> int:
    p = paths.parse_path(args.path)
    t = stats.stat_triple(p)
    image = bijection.involution(p)
    u = stats.stat_triple(image)
    lines = [
        f"image: {paths.render_path(image)}",
        f"triple: area={t.area} skips={t.skips} dinv={t.dinv}",
        f"image triple: area={u.area} skips={u.skips} dinv={u.dinv}",
    ]
    obj = {
        "path": args.path,
        "triple": _triple_obj(t),
        "image": paths.render_path(image),
        "image_triple": _triple_obj(u),
    }
    _emit(args, lines, obj)
    return 0


def cmd_transpose(args) -> int:
    p = paths.parse_path(args.path)
    word = paths.render_path(paths.transpose(p))
    _emit(args, [word], {"path": args.path, "transpose": word})
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(max_n=args.max_n, max_mn=args.max_mn)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        obj = {
            "passed": len(results) - len(failed),
            "failed": len(failed),
            "checks": [
                {
                    "name": r.name,
                    "ok": r.ok,
                    "checked": r.checked,
                    "counterexample": r.counterexample,
                }
                for r in results
            ],
        }
        print(json.dumps(obj, sort_keys=True))
    else:
        for r in results:
            line = f"{'PASS' if r.ok else 'FAIL'}  {r.name:<24} {r.checked:>7} checked"
            if not r.ok:
                line += f"  counterexample: {r.counterexample}"
            print(line)
        print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="qtcatalan",
        description=(
            "Rational Dyck path statistics, rank words, and q,t-Catalan "
            "polynomials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "enumerate", parents=[fmt], help="list all (m,n)-Dyck paths as step words"
    )
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser(
        "stats", parents=[fmt], help="statistics of one path given as a step word"
    )
    sp.add_argument("path", help="step word over {N,E}, e.g. NNENNEE")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser(
        "rankword",
        parents=[fmt],
        help="rank word of a lattice (give n) or of a path (give its step word)",
    )
    sp.add_argument("target", help="row count n, or a step word")
    sp.set_defaults(func=cmd_rankword)

    sp = sub.add_parser(
        "omega",
        parents=[fmt],
        help="rebuild the marked rank word and path from (area, skips, dinv)",
    )
    sp.add_argument("area", type=int)
    sp.add_argument("skips", type=int)
    sp.add_argument("dinv", type=int)
    sp.set_defaults(func=cmd_omega)

    sp = sub.add_parser("poly", parents=[fmt], help="the polynomial C_{m,n}(q,t)")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument(
        "--method",
        choices=("brute", "closed"),
        default="brute",
        help="sum over paths, or use the three-column closed form",
    )
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser(
        "bijection",
        parents=[fmt],
        help="image of a (3,n)-path under the area/dinv exchange",
    )
    sp.add_argument("path", help="step word over {N,E}")
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser(
        "transpose", parents=[fmt], help="the complementary (n,m)-path"
    )
    sp.add_argument("path", help="step word over {N,E}")
    sp.set_defaults(func=cmd_transpose)

    sp = sub.add_parser(
        "verify", parents=[fmt], help="run the exhaustive property checks"
    )
    sp.add_argument("--max-n", type=int, default=16, help="bound on n for (3,n) checks")
    sp.add_argument(
        "--max-mn", type=int, default=12, help="bound on m+n for general checks"
    )
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
