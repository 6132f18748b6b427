"""Command-line interface.

Subcommands: inspect, enumerate, count-r, coverage, verify, optimal, decode,
simulate.  Exit codes: 0 on success, 1 when a verification reports a
violation, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import optimal_code_size, read_coverage, verify_reconstruction
from .balls import BallKind
from .codebooks import Codebook, CodebookSpec, Family, count_R, redundancy
from .confusability import VerdictKind, predicted_intersection, type_a_confusable, type_b_confusable
from .decoder import candidate_list, decode
from .sim import build_config, load_config_file, run_simulation, write_csv
from .words import Word, hamming_distance


def _add_codebook_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    p.add_argument("--P", type=int, default=None, help="period budget (syndrome families)")
    p.add_argument("--c", type=int, default=None, help="inversion syndrome residue")
    p.add_argument("--d", type=int, default=None, help="sum syndrome residue")


def _codebook(args) -> Codebook:
    return Codebook(CodebookSpec(Family(args.family), args.n, args.q, args.P, args.c, args.d))


def _print_witness(witness) -> None:
    x, y = witness.reconstruct()
    print(f"  prefix    = {witness.prefix}")
    print(f"  core      = {witness.core_x} / {witness.core_y}")
    print(f"  suffix    = {witness.suffix}")
    print(f"  alpha,beta = {witness.alpha},{witness.beta}  m = {witness.m}"
          + (f"  form = {witness.form.value}" if witness.form else ""))
    print(f"  rebuilt   = {x} / {y}")


def _cmd_inspect(args) -> int:
    x = Word.parse(args.x)
    y = Word.parse(args.y)
    print(f"x = {x}")
    print(f"y = {y}")
    print(f"hamming distance = {hamming_distance(x, y)}")
    for name, fn in (("Type-A", type_a_confusable), ("Type-B", type_b_confusable)):
        verdict = fn(x, y)
        if verdict.kind is VerdictKind.NOT_CONFUSABLE:
            print(f"{name}: not confusable")
        else:
            print(f"{name}: confusable (m = {verdict.witness.m})")
            _print_witness(verdict.witness)
    print("predicted intersections:")
    for kind in (BallKind.D, BallKind.I, BallKind.ID, BallKind.SD, BallKind.SI, BallKind.EDIT):
        print(f"  {kind}: {predicted_intersection(x, y, kind)}")
    return 0


def _cmd_enumerate(args) -> int:
    cb = _codebook(args)
    count = 0
    for w in cb.iter_words():
        print(w)
        count += 1
    print(f"# {count} codewords, redundancy {redundancy(cb):.4f}", file=sys.stderr)
    return 0


def _cmd_count_r(args) -> int:
    ns = [int(part) for part in args.n.split(",")]
    print("n,q,ell,t,count")
    for n in ns:
        print(f"{n},{args.q},{args.ell},{args.t},{count_R(n, args.q, args.ell, args.t)}")
    return 0


def _cmd_coverage(args) -> int:
    cb = _codebook(args)
    kind = BallKind.parse(args.ball)
    report = read_coverage(cb, kind)
    print(f"nu = {report.nu}")
    if report.witness:
        print(f"witness: {report.witness[0]} {report.witness[1]}")
    print(f"pairs scanned: {report.pairs_scanned}")
    if args.csv:
        Path(args.csv).write_text(
            "family,n,q,ball,nu,pairs_scanned\n"
            f"{args.family},{args.n},{args.q},{kind},{report.nu},{report.pairs_scanned}\n",
            encoding="utf-8",
        )
    return 0


def _cmd_verify(args) -> int:
    cb = _codebook(args)
    kind = BallKind.parse(args.ball)
    result = verify_reconstruction(cb, args.N, kind)
    if result.passed:
        print(f"PASS: coverage below {args.N} for ball {kind}")
        return 0
    x, y = result.witness
    print(f"FAIL: |B({x}) ∩ B({y})| = {result.witness_intersection} >= {args.N}")
    return 1


def _cmd_optimal(args) -> int:
    kind = BallKind.parse(args.ball)
    result = optimal_code_size(args.n, args.q, args.N, kind)
    print(f"n={result.n} q={result.q} N={result.n_reads} ball={kind}")
    print(f"max code size = {result.max_code_size}")
    print(f"rho_exact = {result.rho_exact:.6f}")
    if args.show_code:
        for w in result.witness_code:
            print(w)
    if args.csv:
        Path(args.csv).write_text(
            "n,q,N,ball,max_code_size,rho_exact\n"
            f"{result.n},{result.q},{result.n_reads},{kind},{result.max_code_size},{result.rho_exact:.6g}\n",
            encoding="utf-8",
        )
    return 0


def _cmd_decode(args) -> int:
    cb = _codebook(args)
    reads = [Word.parse(text) for text in args.read]
    if args.show_lists:
        for y in reads:
            lst = sorted(str(w) for w in candidate_list(y, cb))
            print(f"L({y}) = {{{', '.join(lst)}}}")
    result = decode(reads, cb)
    print(f"list sizes: {list(result.list_sizes)}")
    print(f"winning votes: {result.winning_votes}" + ("  (tie)" if result.tie else ""))
    if result.codeword is None:
        print("result: FAIL")
        return 1
    print(f"result: {result.codeword}")
    return 0


def _cmd_simulate(args) -> int:
    values = load_config_file(args.config) if args.config else {}
    overrides = {
        "n": args.n,
        "q": args.q,
        "families": args.families,
        "P": args.P,
        "c": args.c,
        "d": args.d,
        "n_sys": args.n_sys,
        "p_d": args.p_d,
        "p_i": args.p_i,
        "p_s": args.p_s,
        "trials": args.trials,
        "seed": args.seed,
        "workers": args.threads,
    }
    config = build_config(values, overrides)
    report = run_simulation(config)
    header = f"{'family':8} {'n_sys':>5} {'p_d':>10} {'p_i':>10} {'p_s':>10} {'failures':>9} {'rate':>10} {'95% CI':>23}"
    print(header)
    for row in report.rows:
        ci = f"[{row.ci_low:.6g}, {row.ci_high:.6g}]"
        print(
            f"{row.family:8} {row.n_sys:>5} {row.p_d:>10.4g} {row.p_i:>10.4g} {row.p_s:>10.4g} "
            f"{row.failures:>9} {row.failure_rate:>10.6g} {ci:>23}"
        )
    if args.csv:
        write_csv(report, args.csv)
        print(f"wrote {args.csv}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="editrecon",
        description="Reconstruction codes for single-edit channels: analysis, construction, decoding, simulation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="confusability verdicts and predicted intersections for a word pair")
    p.add_argument("--x", required=True, help="first word, e.g. q2:0111")
    p.add_argument("--y", required=True, help="second word, e.g. q2:1110")
    p.set_defaults(fn=_cmd_inspect)

    p = sub.add_parser("enumerate", help="list all codewords of a small code")
    _add_codebook_args(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("count-r", help="count run-length-limited words")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, required=True, choices=[1, 2])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", required=True, help="length or comma-separated lengths")
    p.set_defaults(fn=_cmd_count_r)

    p = sub.add_parser("coverage", help="maximum error-ball intersection over a code")
    _add_codebook_args(p)
    p.add_argument("--ball", required=True, help="S, D, I, ID, SD, SI, EDIT, St:t, Dt:t")
    p.add_argument("--csv", default=None, help="also write the result as CSV")
    p.set_defaults(fn=_cmd_coverage)

    p = sub.add_parser("verify", help="check an (n, N; B)-reconstruction claim")
    _add_codebook_args(p)
    p.add_argument("--ball", required=True)
    p.add_argument("--N", type=int, required=True, help="number of reads")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("optimal", help="exact optimal code size by independent-set search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--ball", required=True)
    p.add_argument("--show-code", action="store_true", help="print one optimal code")
    p.add_argument("--csv", default=None)
    p.set_defaults(fn=_cmd_optimal)

    p = sub.add_parser("decode", help="decode a set of reads against a code")
    _add_codebook_args(p)
    p.add_argument("--read", action="append", required=True, help="repeatable; e.g. --read q2:0110")
    p.add_argument("--show-lists", action="store_true")
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo failure-rate estimation")
    p.add_argument("--config", default=None, help="flat key=value config file")
    p.add_argument("--families", default=None, help="comma-separated family names")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--P", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--n-sys", dest="n_sys", default=None, help="comma-separated read counts")
    p.add_argument("--p-d", dest="p_d", default=None, help="comma-separated deletion rates")
    p.add_argument("--p-i", dest="p_i", default=None, help="comma-separated insertion rates")
    p.add_argument("--p-s", dest="p_s", default=None, help="comma-separated substitution rates")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", "--workers", dest="threads", type=int, default=None)
    p.add_argument("--csv", default=None, help="write the report to this CSV path")
    p.set_defaults(fn=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
