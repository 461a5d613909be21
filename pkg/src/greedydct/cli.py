"""
Command-line entry point: ``greedydct <subcommand> [options]``.

Every subcommand computes its full result before writing anything, and each
file is written atomically, so a failed run leaves no partial artifacts.
CSV floats use four decimals for table-style figures of merit and six
significant digits elsewhere, which makes repeated runs byte-identical.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import catalog, codec, fast, reference, search
from .circular import circular_summary
from .errors import InfeasibleSequenceError, PreconditionError, UnknownTransformError
from .linalg import exact_dct_matrix, has_orthonormal_rows
from .metrics import CovarianceModel, MetricsReport, coding_gain_curve, default_rho_grid, full_report
from .pgm import atomic_write, read_pgm, write_pgm

log = logging.getLogger("greedydct")

CORPUS_ENV = "GREEDYDCT_CORPUS"
FIXTURES = Path(__file__).resolve().parents[2] / "tests" / "fixtures"


class UsageError(Exception):
    """Bad arguments detected after parsing; reported like an argparse error."""


def _f4(x: float) -> str:
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _g6(x: float) -> str:
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.6g}"


def _csv(header, rows) -> str:
    return "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    atomic_write(path, text.encode())


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(Path(out), text)


def _names(values, default) -> list[str]:
    names = []
    for v in values or default:
        names += [n for n in v.split(",") if n]
    for n in names:
        if n not in catalog.NAMES:
            raise UnknownTransformError(n, catalog.NAMES)
    return names


def _int_list(text: str) -> list[int]:
    """``"3,14"`` or ``"1-64"`` or a mix such as ``"1-4,8"``."""
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out += range(int(lo), int(hi) + 1)
        elif part:
            out.append(int(part))
    return out


# derive

def _catalog_label(m: np.ndarray) -> str:
    for name in catalog.APPROXIMATIONS:
        e = catalog.entry(name)
        if e.t.shape == m.shape and e.prescale == 1 and np.array_equal(e.t, m):
            return name
    return ""


def cmd_derive(args) -> int:
    space = search.build_search_space(search.NAMED_SETS[args.set])
    fixed = () if args.all_orders else tuple(_int_list(args.fixed))
    d = search.derive_all(space, fixed, tie_policy=args.tie_policy, workers=args.parallel,
                          checkpoint=args.checkpoint)
    for seq, row in d.infeasible:
        print(f"warning: order {' '.join(map(str, seq.order))} has no feasible candidate for row {row}",
              file=sys.stderr)
    entries = ",".join(str(e) for e in d.space)
    blocks = [
        f"# search over {{{entries}}}^8, fixed rows {' '.join(map(str, d.fixed_rows)) or 'none'}, "
        f"tie policy {args.tie_policy}\n"
        f"# {d.sequences} sequences, {len(d.results)} distinct matrices, {len(d.infeasible)} infeasible\n"
    ]
    for k, res in enumerate(d.results, 1):
        label = _catalog_label(res.matrix)
        comments = [
            f"matrix {k}: {res.multiplicity} sequences" + (f", equals {label}" if label else ""),
            "first order " + " ".join(map(str, res.producing_orders[0].order)),
        ]
        blocks.append(catalog.format_matrix(res.matrix, comments=comments))
    _emit("\n".join(blocks), args.out)
    print(f"{len(d.results)} distinct matrices from {d.sequences} sequences "
          f"({len(d.infeasible)} infeasible)", file=sys.stderr)
    return 0


# evaluate / circular / cg-curve

def cmd_evaluate(args) -> int:
    model = CovarianceModel(args.rho)
    rows = []
    for name in _names(args.transform, catalog.NAMES):
        r = full_report(name, model)
        rows.append([name] + [_f4(v) for v in r.row()[1:]])
    _emit(_csv(MetricsReport.COLUMNS, rows), args.out)
    return 0


def cmd_circular(args) -> int:
    ref = exact_dct_matrix(8)
    rows = []
    for name in _names(args.transform, catalog.NAMES):
        t = ref if name == "DCT" else catalog.entry(name).matrix
        rows.append([name] + [_f4(v) for v in circular_summary(t, ref)])
    _emit(_csv(("name", "theta_bar_deg", "variance", "dbar_mod_rad"), rows), args.out)
    return 0


def cmd_cg_curve(args) -> int:
    grid = default_rho_grid() if args.rho is None else np.array(
        [float(v) for v in args.rho.split(",")])
    rows = []
    for name in _names(args.transform, catalog.APPROXIMATIONS):
        for rho, delta in coding_gain_curve(catalog.get_transform(name).c_hat, grid):
            rows.append([name, _g6(rho), _g6(delta)])
    _emit(_csv(("transform", "rho", "delta_cg_db"), rows), args.out)
    return 0


# fast-check / count-ops / scale

def cmd_fast_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    rows = []
    ok = True
    for n in _int_list(args.length):
        plan = fast.scaled_plan(n)
        t = fast.scaled_transform(n).t
        x = rng.integers(-args.bound, args.bound + 1, size=(n, args.vectors), dtype=np.int64)
        mismatches = int(np.sum(np.any(fast.apply_plan(plan, x) != t @ x, axis=0)))
        exact = bool(fast.verify_factorization()) if n == 8 else np.array_equal(fast.plan_matrix(plan), t)
        ok &= mismatches == 0 and exact
        rows.append([plan.name, str(n), str(args.vectors), str(mismatches), str(plan.additions),
                     str(plan.shifts), str(plan.bits_required(args.bound)), "yes" if exact else "no"])
    _emit(_csv(("transform", "length", "vectors", "mismatches", "additions", "bit_shifts",
                "bits_required", "structure_exact"), rows), args.out)
    return 0 if ok else 1


def _op_count(name: str) -> tuple[int, int]:
    if name in ("T1", "T1-8", "T1-16", "T1-32"):
        n = 8 if name in ("T1", "T1-8") else int(name.split("-")[1])
        return fast.scaled_plan(n).declared_cost
    if name in reference.OPERATION_COUNTS:
        c = reference.OPERATION_COUNTS[name]
        return c.additions, c.bit_shifts
    hevc = {f"IDCT-HEVC-{n}": c for n, c in reference.HEVC_IDCT_COSTS.items()}
    if name in hevc:
        return hevc[name]
    raise UsageError(f"no operation count for {name!r}")


def cmd_count_ops(args) -> int:
    names = []
    for v in args.transform or ["T1,T1-16,T1-32"]:
        names += [n for n in v.split(",") if n]
    rows = [[n, *map(str, _op_count(n))] for n in names]
    if args.plan_out:
        if len(names) != 1 or not names[0].startswith("T1"):
            raise UsageError("--plan-out needs exactly one of T1, T1-16, T1-32")
        n = 8 if names[0] in ("T1", "T1-8") else int(names[0].split("-")[1])
        _write_atomic(Path(args.plan_out), fast.scaled_plan(n).text())
    _emit(_csv(("transform", "additions", "bit_shifts"), rows), args.out)
    return 0


def cmd_scale(args) -> int:
    if args.input:
        st = fast.jam_scale(catalog.parse_matrix(Path(args.input).read_text())[0])
    else:
        if args.size not in (16, 32):
            raise UsageError("--size must be 16 or 32")
        st = fast.scaled_transform(args.size)
    diag = " ".join(str(int(v)) for v in np.diag(st.diagonal))
    comments = [f"{st.size}-point scaled matrix, pending factor 2^(-{st.levels}/2)",
                f"diag(T T^T) = {diag}"]
    _emit(catalog.format_matrix(st.t, comments=comments), args.out)
    return 0


# compress

def _collect_images(paths) -> list[Path]:
    if not paths:
        paths = [os.environ.get(CORPUS_ENV) or str(FIXTURES)]
    files = []
    for p in map(Path, paths):
        if p.is_dir():
            files += sorted(p.glob("*.pgm"))
        elif p.is_file():
            files.append(p)
        else:
            raise UsageError(f"no such image or directory: {p}")
    if not files:
        raise UsageError("no .pgm images found")
    return files


def _compress_one(job):
    path, names, rs = job
    img = read_pgm(path)
    results = []
    recons = {}
    for name in names:
        tr = catalog.get_transform(name)
        for r in rs:
            recon, res = codec.compress_image(img, tr, r, path.stem)
            results.append(res)
            recons[(name, r)] = np.round(recon).astype(np.uint8)
    return results, recons


def cmd_compress(args) -> int:
    names = _names(args.transform, ["DCT,T1"])
    for name in names:
        if not has_orthonormal_rows(catalog.get_transform(name).c_hat, 1e-10):
            raise UsageError(f"{name} is not orthogonal; the codec needs an orthonormal transform")
    rs = _int_list(args.r)
    if not rs or any(not 1 <= r <= 64 for r in rs):
        raise UsageError("--r values must lie in 1..64")
    images = _collect_images(args.images)
    jobs = [(p, names, rs) for p in images]
    if args.parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.parallel) as pool:
            outcomes = list(pool.map(_compress_one, jobs))
    else:
        outcomes = [_compress_one(j) for j in jobs]
    rows = []
    for results, _ in outcomes:
        for res in results:
            rows.append([res.image, res.transform, str(res.r), _g6(res.bpp), _g6(res.mse),
                         _g6(res.psnr), _g6(res.ssim)])
    if args.recon_dir:
        for path, (_, recons) in zip(images, outcomes):
            for (name, r), img in recons.items():
                write_pgm(Path(args.recon_dir) / f"{path.stem}_{name}_r{r:02d}.pgm", img)
    _emit(_csv(codec.CompressionResult.COLUMNS, rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greedydct", description=__doc__.strip().splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--out", help="output file (default: stdout)")
        return sp

    sp = add("derive", cmd_derive, "greedy search for low-complexity matrices")
    sp.add_argument("--set", choices=sorted(search.NAMED_SETS), default="d1",
                    help="d1 = {0,+-1}, d2 = {0,+-1,+-2}")
    sp.add_argument("--fixed", default="1,5", help="rows fixed to their sign pattern (default 1,5)")
    sp.add_argument("--all-orders", action="store_true", help="fix no rows; run all 8! orders")
    sp.add_argument("--tie-policy", choices=("float", "canonical"), default="float")
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    sp.add_argument("--checkpoint", help="progress file; an interrupted run resumes from it")

    sp = add("evaluate", cmd_evaluate, "epsilon, MSE, unified coding gain and efficiency")
    sp.add_argument("--transform", action="append", help="name or comma list (default: all)")
    sp.add_argument("--rho", type=float, default=0.95)

    sp = add("circular", cmd_circular, "circular statistics of row angles")
    sp.add_argument("--transform", action="append")

    sp = add("cg-curve", cmd_cg_curve, "unified coding gain loss against the DCT over rho")
    sp.add_argument("--transform", action="append", help="default: all approximations")
    sp.add_argument("--rho", help="comma list (default 0.01..0.99)")

    sp = add("fast-check", cmd_fast_check, "check the fast plans against the matrix product")
    sp.add_argument("--length", default="8,16,32")
    sp.add_argument("--vectors", type=int, default=100_000)
    sp.add_argument("--bound", type=int, default=255, help="inputs drawn from [-bound, bound]")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("count-ops", cmd_count_ops, "additions and bit-shifts per transform")
    sp.add_argument("--transform", action="append", help="default: T1,T1-16,T1-32")
    sp.add_argument("--plan-out", help="also export the plan node list")

    sp = add("scale", cmd_scale, "double a transform with the butterfly scaling")
    sp.add_argument("--size", type=int, default=16)
    sp.add_argument("--input", help="matrix text file to scale once (default: T1 up to --size)")

    sp = add("compress", cmd_compress, "block compression with zig-zag truncation")
    sp.add_argument("images", nargs="*", help=f"PGM files or directories (default: ${CORPUS_ENV})")
    sp.add_argument("--transform", action="append", help="default: DCT,T1")
    sp.add_argument("--r", default="1-64", help="retained coefficients, e.g. 3,14 or 1-64")
    sp.add_argument("--recon-dir", help="write reconstructions as PGM here")
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "parallel", 1) < 1:
        parser.error("--parallel must be at least 1")
    try:
        return args.func(args)
    except (UsageError, UnknownTransformError, PreconditionError, InfeasibleSequenceError) as err:
        parser.error(str(err))
    except (OSError, ValueError) as err:
        print(f"greedydct: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
