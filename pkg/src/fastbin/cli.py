"""Command-line front end: bin values, run benchmarks, print the model.

Exit codes: 0 success, 1 user/input error, 2 internal invariant failure
(the accelerated binner disagreeing with its oracle; must never happen).
"""

import argparse
import math
import os
import sys

import numpy as np

from fastbin import _backend, analysis, bench
from fastbin.baselines import binary_search_slice, linear_search_bin, linear_search_slice
from fastbin.core import bin_slice, bin_value, precompute, validate_bins
from fastbin.datagen import VALUE_DISTRIBUTIONS, BOUNDARY_STYLES
from fastbin.errors import FastbinError, OracleMismatch

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


def _default_seed():
    env = os.environ.get("FASTBIN_SEED")
    return int(env) if env else 0


def _parse_int_list(text):
    """Comma-separated ints; 'a..b' expands to the inclusive range."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo, hi = token.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif token:
            out.append(int(token))
    if not out:
        raise ValueError(f"no integers in {text!r}")
    return out


def _read_numbers(path):
    """Whitespace-separated decimal numbers; '#' starts a comment."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            body = line.split("#", 1)[0]
            for token in body.split():
                try:
                    values.append(float(token))
                except ValueError:
                    raise FastbinError(f"{path}:{lineno}: could not parse {token!r}")
    return np.asarray(values, dtype=np.float64)


def _add_bench_flags(p):
    p.add_argument("--n", type=int, default=2_000_000, help="values per timed batch")
    p.add_argument("--runs", type=int, default=30, help="timing repetitions (median reported)")
    p.add_argument("--distributions", default="uniform",
                   help=f"comma list from {', '.join(VALUE_DISTRIBUTIONS)}")
    p.add_argument("--boundary-style", default="sorted-uniform-draws", choices=BOUNDARY_STYLES)
    p.add_argument("--seed", type=int, default=None, help="default $FASTBIN_SEED or 0")
    p.add_argument("--backend", default="auto", choices=_backend.BACKENDS)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")


class _Parser(argparse.ArgumentParser):
    # user errors (bad flags) exit 1; code 2 is reserved for internal failures
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USER)


def build_parser():
    parser = _Parser(
        prog="fastbin",
        description="Bin values into non-uniform bins in constant average time per value.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bin = sub.add_parser("bin", help="bin values from a file against boundaries from a file")
    p_bin.add_argument("boundaries", help="text file of strictly increasing boundary values")
    p_bin.add_argument("values", help="text file of query values")
    p_bin.add_argument("--out", default=None, help="output path (default stdout)")
    p_bin.add_argument("--extra-cells", type=int, default=0,
                       help="extra grid cells for the accelerated method")
    p_bin.add_argument("--method", default="proposed", choices=["proposed", "binary", "linear"])

    p_b1 = sub.add_parser("bench1", help="speedup over binary search as the bin count grows")
    p_b1.add_argument("--m", default="4,8,16,32,64,128,256,512",
                      help="comma list of bin counts ('a..b' for a range)")
    p_b1.add_argument("--include-linear", action="store_true", help="also time linear scan")
    _add_bench_flags(p_b1)

    p_b2 = sub.add_parser("bench2", help="extra speedup from oversampling the grid")
    p_b2.add_argument("--m", default="10,25,50", help="comma list of bin counts")
    p_b2.add_argument("--k", default=None,
                      help="comma list or 'a..b' of extra cells (default 0..m+1 per m)")
    _add_bench_flags(p_b2)

    p_an = sub.add_parser("analyze", help="print the cell-occupancy model for m1 values in m2 cells")
    p_an.add_argument("--m1", type=int, required=True)
    p_an.add_argument("--m2", type=int, required=True)
    p_an.add_argument("--n", type=int, default=1, help="item count for the cost model")
    p_an.add_argument("--csv", default=None, help="also write the full P_j table as CSV")

    sub.add_parser("selftest", help="run the built-in worked examples and identities")

    return parser


def _open_out(path):
    return open(path, "w", encoding="utf-8", newline="") if path else sys.stdout


def cmd_bin(args):
    boundaries = _read_numbers(args.boundaries)
    values = _read_numbers(args.values)
    bins = validate_bins(boundaries)
    if args.method == "binary":
        result = binary_search_slice(bins, values)
    elif args.method == "linear":
        result = linear_search_slice(bins, values)
    else:
        acc = precompute(bins, args.extra_cells)
        result = bin_slice(acc, values)
    out = _open_out(args.out)
    try:
        for q in result:
            out.write(f"{q}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _bench_config(args, m_values, k_values=None):
    seed = args.seed if args.seed is not None else _default_seed()
    return bench.BenchConfig(
        m_values=m_values,
        k_values=k_values,
        n=args.n,
        runs=args.runs,
        distributions=[d.strip() for d in args.distributions.split(",") if d.strip()],
        seed=seed,
        boundary_style=args.boundary_style,
        include_linear=getattr(args, "include_linear", False),
        backend=args.backend,
    )


def _emit_report(report, out_path):
    bench.log_context(sys.stderr, backend=report.backend)
    out = _open_out(out_path)
    try:
        report.write_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_bench1(args):
    config = _bench_config(args, _parse_int_list(args.m))
    report = bench.run_experiment_1(config)
    _emit_report(report, args.out)
    return EXIT_OK


def cmd_bench2(args):
    k_values = _parse_int_list(args.k) if args.k is not None else None
    config = _bench_config(args, _parse_int_list(args.m), k_values)
    report = bench.run_experiment_2(config)
    _emit_report(report, args.out)
    return EXIT_OK


def _format_count(c):
    if c < 10**40:
        return str(c)
    digits = len(str(c))
    lead = str(c)[:6]
    return f"{lead[0]}.{lead[1:]}e+{digits - 1}"


def cmd_analyze(args):
    if args.m1 < 1 or args.m2 < 2:
        print("analyze requires --m1 >= 1 and --m2 >= 2", file=sys.stderr)
        return EXIT_USER
    model = analysis.OccupancyModel(args.m1, args.m2)
    dist = analysis.slot_probabilities(model)
    print(f"m1={args.m1}")
    print(f"m2={args.m2}")
    print(f"C={_format_count(analysis.count_compositions(model))}")
    for j in range(min(args.m1, 10) + 1):
        print(f"P_{j}={dist.probs[j]:.12g}")
    print(f"P={dist.p_tail:.12g}")
    print(f"mu_all={dist.mu_all:.12g}")
    print(f"mu_gt2={dist.mu_gt2:.12g}")
    if dist.p_tail > 0.0 and args.m1 >= 1:
        t_bs, t_p, ratio = analysis.theoretical_speedup(model, args.n)
        print(f"t_bs={t_bs:.12g}")
        print(f"t_p={t_p:.12g}")
        print(f"speedup={ratio:.12g}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write("j,p_j\n")
            for j, p in enumerate(dist.probs):
                fh.write(f"{j},{p:.17g}\n")
    return EXIT_OK


def cmd_selftest(args):
    failures = 0

    def check(name, ok, detail=""):
        nonlocal failures
        if ok:
            print(f"ok: {name}")
        else:
            failures += 1
            print(f"FAIL: {name} {detail}")

    bins = validate_bins([2, 11, 19, 20, 21, 27, 29, 30])
    acc = precompute(bins, 0)
    check("grid delta is 4", acc.grid.delta == 4.0, f"got {acc.grid.delta}")
    check("grid edges 2,6,...,30", np.array_equal(acc.grid.edges(), np.arange(2.0, 31.0, 4.0)))
    check("histogram", acc.hist.tolist() == [0, 0, 1, 0, 3, 0, 2], f"got {acc.hist.tolist()}")
    check("prefix sums", acc.cumhist.tolist() == [1, 1, 1, 2, 2, 5, 5, 7],
          f"got {acc.cumhist.tolist()}")
    queries = {25.0: 5, 13.0: 2, 10.5: 1, 19.5: 3, 1.9: 0, 30.0: 8}
    for x, want in queries.items():
        check(f"bin({x}) == {want}", bin_value(acc, x) == want, f"got {bin_value(acc, x)}")
    xs = np.array(list(queries))
    check("binary engine agrees", np.array_equal(binary_search_slice(bins, xs),
                                                 [queries[x] for x in xs]))
    check("linear oracle agrees", [linear_search_bin(bins, x) for x in xs]
          == [queries[x] for x in xs])

    model = analysis.OccupancyModel(3, 3)
    check("composition count (3,3) == 10", analysis.count_compositions(model) == 10)
    check("slot counts (3,3) == 4,3,2,1",
          [analysis.count_slot_value(model, j) for j in range(4)] == [4, 3, 2, 1])
    dist = analysis.slot_probabilities(model)
    check("P_0,P_1,P_2,P == .4,.3,.2,.1",
          np.allclose(list(dist.probs[:3]) + [dist.p_tail], [0.4, 0.3, 0.2, 0.1], atol=1e-12))
    listed = list(analysis.enumerate_compositions(analysis.OccupancyModel(4, 3)))
    check("enumeration (4,3) lists 15", len(listed) == 15 and len(set(listed)) == 15)
    for m1 in range(1, 7):
        for m2 in range(1, 7):
            small = analysis.OccupancyModel(m1, m2)
            counts, rows = analysis.slot_value_census(small)
            ok = rows == analysis.count_compositions(small) and all(
                counts[j] == m2 * analysis.count_slot_value(small, j) for j in range(m1 + 1)
            )
            if not ok:
                check(f"census identities ({m1},{m2})", False)
                break
    else:
        check("census identities for m1,m2 <= 6", True)

    rng = np.random.default_rng(0)
    rand_bins = validate_bins(np.sort(rng.uniform(0, 1, 257)))
    rand_acc = precompute(rand_bins, 0)
    rand_xs = rng.uniform(-0.1, 1.1, 10_000)
    agree = np.array_equal(bin_slice(rand_acc, rand_xs), binary_search_slice(rand_bins, rand_xs))
    agree = agree and np.array_equal(binary_search_slice(rand_bins, rand_xs),
                                     linear_search_slice(rand_bins, rand_xs))
    check("random cross-check of all three engines", agree)

    print(f"selftest: {'all checks passed' if failures == 0 else f'{failures} checks FAILED'}")
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


_COMMANDS = {
    "bin": cmd_bin,
    "bench1": cmd_bench1,
    "bench2": cmd_bench2,
    "analyze": cmd_analyze,
    "selftest": cmd_selftest,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OracleMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except FastbinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
