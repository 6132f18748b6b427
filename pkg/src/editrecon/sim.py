"""Monte Carlo estimation of decoder failure rates over edit channels.

A simulation sweeps a grid of (codebook, read count, channel point) cells.
Each trial samples a codeword uniformly, pushes it through the channel once
per read, decodes, and fails when decoding aborts or returns the wrong
codeword.  Failure rates carry 95% Wilson confidence intervals.

Per-trial generators are derived from (seed, row index, trial index), so a
report depends only on the configuration, never on scheduling or the worker
count.  Results serialise to CSV with the fixed header below.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import math
import os
from dataclasses import dataclass
from pathlib import Path

from .channel import ChannelParams, generate_reads, make_rng
from .codebooks import Codebook, CodebookSpec, Family
from .decoder import decode

CSV_COLUMNS = (
    "family",
    "n",
    "q",
    "P",
    "c",
    "d",
    "n_sys",
    "p_d",
    "p_i",
    "p_s",
    "trials",
    "failures",
    "failure_rate",
    "ci_low",
    "ci_high",
    "seed",
)
CSV_HEADER = ",".join(CSV_COLUMNS)

SEED_ENV_VAR = "RECON_SEED"

_WILSON_Z = 1.96  # 95% two-sided


@dataclass(frozen=True)
class SimConfig:
    codebooks: tuple[CodebookSpec, ...]
    n_sys: tuple[int, ...]
    p_d: tuple[float, ...]
    p_i: tuple[float, ...]
    p_s: tuple[float, ...]
    trials: int
    seed: int
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.codebooks:
            raise ValueError("at least one codebook is required")
        if not (self.n_sys and self.p_d and self.p_i and self.p_s):
            raise ValueError("sweep grids must be non-empty")
        if any(n < 1 for n in self.n_sys):
            raise ValueError("read counts must be positive")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        for pd, pi, ps in itertools.product(self.p_d, self.p_i, self.p_s):
            ChannelParams(pd, pi, ps)  # validates each grid point

    def grid(self):
        return itertools.product(self.codebooks, self.n_sys, self.p_d, self.p_i, self.p_s)


@dataclass(frozen=True)
class SimRow:
    family: str
    n: int
    q: int
    P: int | None
    c: int | None
    d: int | None
    n_sys: int
    p_d: float
    p_i: float
    p_s: float
    trials: int
    failures: int
    failure_rate: float
    ci_low: float
    ci_high: float
    seed: int


@dataclass(frozen=True)
class SimReport:
    rows: tuple[SimRow, ...]


def wilson_interval(failures: int, trials: int, z: float = _WILSON_Z) -> tuple[float, float]:
    """95% Wilson score interval; well behaved at zero or few failures."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 0 <= failures <= trials:
        raise ValueError(f"failures must lie in [0, trials], got {failures}/{trials}")
    phat = failures / trials
    denom = 1.0 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials + z * z / (4.0 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def _trial_fails(cb: Codebook, n_sys: int, params: ChannelParams, seed_key) -> bool:
    rng = make_rng(seed_key)
    x = cb.sample(rng)
    reads = generate_reads(x, n_sys, params, rng)
    result = decode(reads, cb)
    return result.codeword is None or result.codeword != x


def _chunk_failures(
    spec: CodebookSpec,
    n_sys: int,
    params: ChannelParams,
    seed: int,
    row_idx: int,
    start: int,
    stop: int,
) -> int:
    cb = Codebook(spec)
    failures = 0
    for trial in range(start, stop):
        if _trial_fails(cb, n_sys, params, (seed, row_idx, trial)):
            failures += 1
    return failures


def run_simulation(config: SimConfig) -> SimReport:
    """Run every grid cell for ``config.trials`` trials each.

    Fully deterministic for a given configuration: trial t of row r always
    uses the generator seeded by (seed, r, t) regardless of worker count.
    """
    rows: list[SimRow] = []
    pool = None
    if config.workers > 1:
        pool = concurrent.futures.ProcessPoolExecutor(max_workers=config.workers)
    try:
        for row_idx, (spec, n_sys, pd, pi, ps) in enumerate(config.grid()):
            params = ChannelParams(pd, pi, ps)
            if pool is None:
                failures = _chunk_failures(spec, n_sys, params, config.seed, row_idx, 0, config.trials)
            else:
                chunk = max(1, math.ceil(config.trials / (config.workers * 4)))
                futures = [
                    pool.submit(
                        _chunk_failures,
                        spec,
                        n_sys,
                        params,
                        config.seed,
                        row_idx,
                        start,
                        min(start + chunk, config.trials),
                    )
                    for start in range(0, config.trials, chunk)
                ]
                failures = sum(f.result() for f in futures)
            low, high = wilson_interval(failures, config.trials)
            rows.append(
                SimRow(
                    family=spec.family.value,
                    n=spec.n,
                    q=spec.q,
                    P=spec.P,
                    c=spec.c,
                    d=spec.d,
                    n_sys=n_sys,
                    p_d=pd,
                    p_i=pi,
                    p_s=ps,
                    trials=config.trials,
                    failures=failures,
                    failure_rate=failures / config.trials,
                    ci_low=low,
                    ci_high=high,
                    seed=config.seed,
                )
            )
    finally:
        if pool is not None:
            pool.shutdown()
    return SimReport(tuple(rows))


def _fmt_float(x: float) -> str:
    return f"{x:.6g}"


def _fmt_opt(x: int | None) -> str:
    return "" if x is None else str(x)


def format_row(row: SimRow) -> str:
    return ",".join(
        (
            row.family,
            str(row.n),
            str(row.q),
            _fmt_opt(row.P),
            _fmt_opt(row.c),
            _fmt_opt(row.d),
            str(row.n_sys),
            _fmt_float(row.p_d),
            _fmt_float(row.p_i),
            _fmt_float(row.p_s),
            str(row.trials),
            str(row.failures),
            _fmt_float(row.failure_rate),
            _fmt_float(row.ci_low),
            _fmt_float(row.ci_high),
            str(row.seed),
        )
    )


def write_csv(report: SimReport, destination) -> None:
    """Write header plus one row per grid cell; floats use 6 significant
    digits.  ``destination`` is a path or an open text file."""
    lines = [CSV_HEADER] + [format_row(row) for row in report.rows]
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        Path(destination).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {destination}: {exc}") from exc


def read_csv(source) -> SimReport:
    """Parse a CSV produced by write_csv back into a report."""
    text = source.read() if hasattr(source, "read") else Path(source).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"bad or missing CSV header; expected {CSV_HEADER!r}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != len(CSV_COLUMNS):
            raise ValueError(f"malformed CSV row: {ln!r}")
        (fam, n, q, P, c, d, n_sys, pd, pi, ps, trials, fails, rate, lo, hi, seed) = parts
        rows.append(
            SimRow(
                family=fam,
                n=int(n),
                q=int(q),
                P=int(P) if P else None,
                c=int(c) if c else None,
                d=int(d) if d else None,
                n_sys=int(n_sys),
                p_d=float(pd),
                p_i=float(pi),
                p_s=float(ps),
                trials=int(trials),
                failures=int(fails),
                failure_rate=float(rate),
                ci_low=float(lo),
                ci_high=float(hi),
                seed=int(seed),
            )
        )
    return SimReport(tuple(rows))


def _parse_list(value: str, parse) -> tuple:
    return tuple(parse(part.strip()) for part in value.split(",") if part.strip())


def load_config_file(path) -> dict:
    """Parse a flat ``key = value`` configuration file into raw strings."""
    values: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line {raw!r}; expected 'key = value'")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def build_config(values: dict, overrides: dict | None = None) -> SimConfig:
    """Assemble a SimConfig from config-file values plus flag overrides.

    Overrides win over file values; the RECON_SEED environment variable wins
    over both.
    """
    merged = dict(values)
    for key, val in (overrides or {}).items():
        if val is not None:
            merged[key] = val
    def need(key):
        if key not in merged:
            raise ValueError(f"missing simulation setting {key!r}")
        return merged[key]

    n = int(need("n"))
    q = int(need("q"))
    families = _parse_list(str(need("families")), str)
    period = int(merged["P"]) if merged.get("P") not in (None, "") else None
    c = int(merged["c"]) if merged.get("c") not in (None, "") else None
    d = int(merged["d"]) if merged.get("d") not in (None, "") else None
    specs = tuple(CodebookSpec(Family(fam), n, q, period, c, d) for fam in families)

    seed = int(merged.get("seed", 0))
    if os.environ.get(SEED_ENV_VAR):
        seed = int(os.environ[SEED_ENV_VAR])
    return SimConfig(
        codebooks=specs,
        n_sys=_parse_list(str(need("n_sys")), int),
        p_d=_parse_list(str(need("p_d")), float),
        p_i=_parse_list(str(need("p_i")), float),
        p_s=_parse_list(str(need("p_s")), float),
        trials=int(need("trials")),
        seed=seed,
        workers=int(merged.get("workers", 1)),
    )
