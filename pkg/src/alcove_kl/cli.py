"""Command-line interface: compute, cache, export, verify.

Exit codes: 0 success, 2 configuration error, 3 stabilization/window
failure, 4 identity-suite failure.  Errors are emitted as a JSON object
on stderr.  Output is canonically sorted, so identical configurations
and cache states produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .cache import RecordCache, cache_dir
from .errors import (
    ConfigError,
    ConsistencyError,
    DomainError,
    StabilizationError,
    WindowError,
)
from .hecke import is_coset_maximal, kl_basis, spherical_kl
from .laurent import LaurentPoly
from .periodic import pkl_table
from .repcalc import (
    baby_verma_support,
    baby_verma_weight_dim,
    ext_dim,
    loewy_layers,
    nabla_weight_dim,
    verma_weight_dim,
)
from .rootsys import ModularContext, Weight, build_root_system
from .verify import run_suite
from .weylext import elt_key, elt_to_json, from_word, gen_indices, length, waff_elements

FORMATS = ("pretty", "json", "csv", "latex")


def _parse_word(text: str) -> list[int]:
    if not text:
        return []
    parts = text.replace(",", " ").split()
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ConfigError(f"cannot parse generator word {text!r}") from exc


def _parse_weight(text: str, rank: int) -> Weight:
    coords = _parse_word(text)
    if len(coords) != rank:
        raise ConfigError(f"weight needs {rank} coordinates, got {len(coords)}")
    return Weight(tuple(coords))


def _system(args):
    if args.type is None or args.rank is None:
        raise ConfigError("--type and --rank are required")
    return build_root_system(args.type, args.rank)


def _context(args) -> ModularContext:
    if args.p is None:
        raise ConfigError("--p is required for this command")
    return ModularContext(_system(args), args.p)


def _elt_from_flag(sys, text):
    word = _parse_word(text)
    for i in word:
        if i not in gen_indices(sys):
            raise ConfigError(f"generator index {i} out of range")
    return from_word(sys, word)


def _emit_rows(rows, header, fmt):
    """Render a list of string tuples in the requested format."""
    if fmt == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=2, sort_keys=True))
    elif fmt == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(str(x) for x in r))
    elif fmt == "latex":
        cols = "l" * len(header)
        print(r"\begin{tabular}{" + cols + "}")
        print(" & ".join(header) + r" \\ \hline")
        for r in rows:
            print(" & ".join(str(x) for x in r) + r" \\")
        print(r"\end{tabular}")
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))


def _elt_str(sys, x) -> str:
    d = elt_to_json(sys, x)
    word = ".".join(str(i) for i in d["w"]) or "e"
    tra = ",".join(str(c) for c in d["t"])
    return f"{word}|{tra}"


def cmd_kl(args) -> int:
    sys = _system(args)
    w = _elt_from_flag(sys, args.w)
    cache = RecordCache(cache_dir(args.cache_dir), f"kl_{sys}")
    key = f"kl:{json.dumps(elt_to_json(sys, w), sort_keys=True)}"
    payload = cache.get(key)
    if payload is None:
        row = kl_basis(sys, w)
        payload = sorted(
            ([elt_to_json(sys, y), p.to_json()] for y, p in row.items()),
            key=lambda item: json.dumps(item[0], sort_keys=True),
        )
        cache.put(key, payload)
    rows = [
        (_elt_str(sys, _from_json(sys, yj)), str(LaurentPoly.from_json(pj)))
        for yj, pj in payload
    ]
    rows.sort()
    _emit_rows(rows, ("y", "h"), args.format)
    return 0


def _from_json(sys, d):
    from .weylext import elt_from_json

    return elt_from_json(sys, d)


def cmd_spherical(args) -> int:
    sys = _system(args)
    w = _elt_from_flag(sys, args.w)
    if not is_coset_maximal(sys, w):
        raise DomainError("the element must be maximal in its finite coset")
    cache = RecordCache(cache_dir(args.cache_dir), f"spherical_{sys}")
    key = f"m:{json.dumps(elt_to_json(sys, w), sort_keys=True)}"
    payload = cache.get(key)
    if payload is None:
        row = spherical_kl(sys, w)
        payload = sorted(
            ([elt_to_json(sys, y), p.to_json()] for y, p in row.items()),
            key=lambda item: json.dumps(item[0], sort_keys=True),
        )
        cache.put(key, payload)
    rows = [
        (_elt_str(sys, _from_json(sys, yj)), str(LaurentPoly.from_json(pj)))
        for yj, pj in payload
    ]
    rows.sort()
    _emit_rows(rows, ("y", "m"), args.format)
    return 0


def cmd_periodic(args) -> int:
    ctx = _context(args)
    sys = ctx.system
    radius = args.window or (3 * length(sys, _w0(sys)) + 4)
    table = pkl_table(ctx, args.lmax, radius)
    cache = RecordCache(cache_dir(args.cache_dir), f"pkl_{sys}")
    rows = []
    for (y, w), entry in table.entries.items():
        key = "p:" + json.dumps(
            [elt_to_json(sys, y), elt_to_json(sys, w), radius], sort_keys=True
        )
        if key not in cache:
            cache.put(
                key, {"poly": entry.poly.to_json(), "stabilized": entry.stabilized}
            )
        rows.append(
            (
                _elt_str(sys, y),
                _elt_str(sys, w),
                str(entry.poly),
                "yes" if entry.stabilized else "no",
            )
        )
    rows.sort()
    _emit_rows(rows, ("y", "w", "p", "stabilized"), args.format)
    return 0


def _w0(sys):
    from .weylext import w0_elt

    return w0_elt(sys)


def cmd_ext(args) -> int:
    ctx = _context(args)
    sys = ctx.system
    w = _elt_from_flag(sys, args.w)
    y = _elt_from_flag(sys, args.y)
    series = ext_dim(ctx, w, y, args.window)
    rows = [(m, c) for m, c in series.terms]
    print(f"# conditional on Lusztig's conjecture; series = {series}")
    _emit_rows([(str(m), str(c)) for m, c in rows], ("degree", "dim"), args.format)
    return 0


def cmd_loewy(args) -> int:
    ctx = _context(args)
    sys = ctx.system
    w = _elt_from_flag(sys, args.w)
    table = loewy_layers(ctx, w, bound=args.lmax, radius=args.window)
    rows = []
    for (label, degree), mult in table.entries.items():
        rows.append(
            (
                str(degree),
                f"L[{_elt_str(sys, label.index)}]<{','.join(str(c) for c in label.shift.coords)}>",
                str(mult),
            )
        )
    rows.sort()
    print(f"# {table.note}")
    _emit_rows(rows, ("layer", "simple", "mult"), args.format)
    return 0


def cmd_char(args) -> int:
    ctx = _context(args)
    sys = ctx.system
    lam = _parse_weight(args.lam, sys.rank)
    kind = args.module
    if kind == "Z":
        support = baby_verma_support(ctx, lam)
        dims = {mu: baby_verma_weight_dim(ctx, lam, mu) for mu in support}
    elif kind in ("Delta", "Nabla"):
        fn = verma_weight_dim if kind == "Delta" else nabla_weight_dim
        support = []
        dims = {}
        for mu in baby_verma_support(ctx, lam):  # finite probe window
            dims[mu] = fn(ctx, lam, mu)
            support.append(mu)
    else:
        raise ConfigError(f"unknown module family {args.module!r}")
    rows = sorted((str(mu), str(d)) for mu, d in dims.items() if d)
    _emit_rows(rows, ("weight", "dim"), args.format)
    print(f"# total {sum(dims.values())}")
    return 0


def cmd_verify(args) -> int:
    ctx = _context(args)
    results = run_suite(ctx, bound=args.lmax, radius=args.window, seed=args.seed)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "ok" if r.passed else "FAIL"
        print(f"{status:4s} {r.name}: {r.detail}")
    if failed:
        raise ConsistencyError(
            "; ".join(f"{r.name}: {r.detail}" for r in failed)
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove-kl",
        description="Exact alcove combinatorics and Kazhdan-Lusztig-type polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_p=True):
        p.add_argument("--type", help="Cartan type letter (A..G)")
        p.add_argument("--rank", type=int)
        if needs_p:
            p.add_argument("--p", type=int, help="prime, must exceed the Coxeter number")
        p.add_argument("--window", type=int, help="window radius for periodic data")
        p.add_argument("--lmax", type=int, default=4, help="length bound")
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--seed", type=int, default=0)

    p_kl = sub.add_parser("kl", help="canonical-basis row of an affine element")
    common(p_kl, needs_p=False)
    p_kl.add_argument("--p", type=int, default=None, help=argparse.SUPPRESS)
    p_kl.add_argument("--w", required=True, help="generator word, e.g. 0,1,2")
    p_kl.set_defaults(fn=cmd_kl)

    p_sph = sub.add_parser("spherical", help="spherical canonical-basis row")
    common(p_sph, needs_p=False)
    p_sph.add_argument("--p", type=int, default=None, help=argparse.SUPPRESS)
    p_sph.add_argument("--w", required=True)
    p_sph.set_defaults(fn=cmd_spherical)

    p_per = sub.add_parser("periodic", help="table of periodic coefficients")
    common(p_per)
    p_per.set_defaults(fn=cmd_periodic)

    p_ext = sub.add_parser("ext", help="Ext generating series of a pair")
    common(p_ext)
    p_ext.add_argument("--w", required=True)
    p_ext.add_argument("--y", required=True)
    p_ext.set_defaults(fn=cmd_ext)

    p_loe = sub.add_parser("loewy", help="radical layers of a baby Verma")
    common(p_loe)
    p_loe.add_argument("--w", required=True)
    p_loe.set_defaults(fn=cmd_loewy)

    p_char = sub.add_parser(
        "char",
        help="weight multiplicities of a standard module "
        "(Delta/Nabla are printed on the finite probe window of Z)",
    )
    common(p_char)
    p_char.add_argument("--module", choices=("Z", "Delta", "Nabla"), default="Z")
    p_char.add_argument("--lam", required=True, help="highest weight coordinates")
    p_char.set_defaults(fn=cmd_char)

    p_ver = sub.add_parser("verify", help="run the identity suite")
    common(p_ver)
    p_ver.set_defaults(fn=cmd_verify, lmax=None, window=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        _error("config", exc)
        return 2
    except (StabilizationError, WindowError) as exc:
        _error("stabilization", exc)
        return 3
    except ConsistencyError as exc:
        _error("identity", exc)
        return 4
    except DomainError as exc:
        _error("config", exc)
        return 2


def _error(kind: str, exc: Exception) -> None:
    print(json.dumps({"error": kind, "message": str(exc)}), file=_sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
