"""CSV validation and figure rendering.

The input schema is the simulator's exact column set; anything else is
rejected up front with the offending column or row named.  Rendering is
deterministic: a fixed style table per code family, a fixed SVG hash salt,
and no timestamps embedded in either format.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_COLUMNS = (
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

X_VARIABLES = ("p_d", "p_s")
FORMATS = ("png", "svg")

# fixed per-family styling so figures are comparable across runs
FAMILY_STYLE = {
    "FULL": dict(color="#444444", marker="o"),
    "C0": dict(color="#1f77b4", marker="s"),
    "C1": dict(color="#17becf", marker="P"),
    "C2": dict(color="#2ca02c", marker="^"),
    "CD": dict(color="#9467bd", marker="v"),
    "CSD": dict(color="#8c564b", marker="X"),
    "CEDIT": dict(color="#d62728", marker="D"),
}
_FALLBACK_COLORS = ("#e377c2", "#bcbd22", "#7f7f7f", "#ff7f0e")


class SchemaError(ValueError):
    """The CSV does not conform to the simulator's output schema."""


@dataclass(frozen=True)
class FigureSpec:
    csv_paths: tuple[str, ...]
    x_variable: str = "p_d"
    out_dir: str = "figs"
    image_format: str = "png"

    def __post_init__(self) -> None:
        if not self.csv_paths:
            raise ValueError("at least one input CSV is required")
        if self.x_variable not in X_VARIABLES:
            raise ValueError(f"x variable must be one of {X_VARIABLES}, got {self.x_variable!r}")
        if self.image_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.image_format!r}")


@dataclass(frozen=True)
class Row:
    family: str
    n_sys: int
    p_d: float
    p_i: float
    p_s: float
    trials: int
    failure_rate: float
    ci_low: float
    ci_high: float


_INT_FIELDS = ("n", "q", "n_sys", "trials", "failures", "seed")
_FLOAT_FIELDS = ("p_d", "p_i", "p_s", "failure_rate", "ci_low", "ci_high")


def load_rows(path) -> list[Row]:
    """Parse and validate one CSV file."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected the simulator header") from None
        unknown = [column for column in header if column not in EXPECTED_COLUMNS]
        if unknown:
            raise SchemaError(f"{path}: unknown column {unknown[0]!r}")
        if tuple(header) != EXPECTED_COLUMNS:
            missing = [column for column in EXPECTED_COLUMNS if column not in header]
            raise SchemaError(f"{path}: missing or misordered columns (first issue: {missing or header})")
        rows: list[Row] = []
        for lineno, record in enumerate(reader, start=2):
            if not record or record == [""]:
                continue
            if len(record) != len(EXPECTED_COLUMNS):
                raise SchemaError(f"{path}: row {lineno} has {len(record)} fields, expected {len(EXPECTED_COLUMNS)}")
            values = dict(zip(EXPECTED_COLUMNS, record))
            parsed: dict[str, float] = {}
            for name in _INT_FIELDS + ("P", "c", "d") + _FLOAT_FIELDS:
                text = values[name]
                if name in ("P", "c", "d") and text == "":
                    continue  # absent for the parity families
                try:
                    parsed[name] = float(text) if name in _FLOAT_FIELDS else int(text)
                except ValueError:
                    raise SchemaError(
                        f"{path}: row {lineno}: bad value {text!r} in column {name!r}"
                    ) from None
            rows.append(
                Row(
                    family=values["family"],
                    n_sys=int(values["n_sys"]),
                    p_d=parsed["p_d"],
                    p_i=parsed["p_i"],
                    p_s=parsed["p_s"],
                    trials=int(values["trials"]),
                    failure_rate=parsed["failure_rate"],
                    ci_low=parsed["ci_low"],
                    ci_high=parsed["ci_high"],
                )
            )
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def _display_floor(row: Row) -> float:
    # zero rates cannot sit on a log axis; show them at the resolution limit
    return 1.0 / (2.0 * max(row.trials, 1))


def _line_key(row: Row, x_variable: str) -> tuple:
    other = row.p_s if x_variable == "p_d" else row.p_d
    return (row.family, other)


def _style_for(family: str, fallback_index: int) -> dict:
    if family in FAMILY_STYLE:
        return FAMILY_STYLE[family]
    return dict(color=_FALLBACK_COLORS[fallback_index % len(_FALLBACK_COLORS)], marker="*")


def render(spec: FigureSpec) -> list[Path]:
    """Render one image per read-count panel; returns the written paths."""
    rows: list[Row] = []
    for path in spec.csv_paths:
        rows.extend(load_rows(path))

    plt.rcParams["svg.hashsalt"] = "simfigs"

    out_dir = Path(spec.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    other_name = "p_s" if spec.x_variable == "p_d" else "p_d"

    for n_sys in sorted({row.n_sys for row in rows}):
        panel = [row for row in rows if row.n_sys == n_sys]
        fig, ax = plt.subplots(figsize=(6.0, 4.2))
        keys = sorted({_line_key(row, spec.x_variable) for row in panel})
        others = {key[1] for key in keys}
        for index, key in enumerate(keys):
            family, other = key
            line = sorted(
                (row for row in panel if _line_key(row, spec.x_variable) == key),
                key=lambda row: getattr(row, spec.x_variable),
            )
            xs = [getattr(row, spec.x_variable) for row in line]
            ys = [max(row.failure_rate, _display_floor(row)) for row in line]
            low = [max(row.ci_low, _display_floor(row)) for row in line]
            high = [max(row.ci_high, _display_floor(row)) for row in line]
            label = family if len(others) == 1 else f"{family} ({other_name}={other:g})"
            style = _style_for(family, index)
            ax.plot(xs, ys, label=label, linewidth=1.4, markersize=5, **style)
            ax.fill_between(xs, low, high, color=style["color"], alpha=0.18, linewidth=0)
        ax.set_yscale("log")
        ax.set_xlabel(spec.x_variable)
        ax.set_ylabel("decoder failure rate")
        ax.set_title(f"reads per word: {n_sys}")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(loc="best", fontsize=8)
        fig.tight_layout()
        target = out_dir / f"failure_vs_{spec.x_variable}_nsys{n_sys}.{spec.image_format}"
        metadata = {"Date": None} if spec.image_format == "svg" else None
        fig.savefig(target, metadata=metadata)
        plt.close(fig)
        written.append(target)
    return written
