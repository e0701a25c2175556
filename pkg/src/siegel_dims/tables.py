"""Deterministic table rendering in text, csv, json and latex.

Output is a pure function of the spec: no locale, no timestamps, big
integers printed without separators except for the optional digit grouping
in text format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arithmetic import is_prime, parse_square_free_level
from .dimensions import (
    GAMMA0_WEIGHT4,
    dim_full_level,
    dim_gamma0,
    dim_paramodular_weight4,
    dim_principal_level,
)
from .errors import InputError, NotTabulatedError, WeightOutOfRangeError

FAMILIES = ("full", "gamma0", "paramodular", "principal")
FORMATS = ("text", "csv", "json", "latex")


@dataclass(frozen=True)
class TableSpec:
    family: str
    weights: tuple[int, ...] = ()
    levels: tuple[int, ...] = ()
    fmt: str = "text"
    group_digits: bool = False


def _validate(spec: TableSpec) -> None:
    if spec.family not in FAMILIES:
        raise InputError(f"unknown family {spec.family!r}; choose from {FAMILIES}")
    if spec.fmt not in FORMATS:
        raise InputError(f"unknown format {spec.fmt!r}; choose from {FORMATS}")
    if len(spec.weights) > 1 and len(spec.levels) > 1:
        raise InputError("only one of the weight range and the level range may vary")

    if spec.family == "full":
        if spec.levels:
            raise InputError("the full modular group takes no level")
        if not spec.weights:
            raise InputError("a weight or weight range is required")
        for k in spec.weights:
            if k < 4:
                raise WeightOutOfRangeError(f"weight must be at least 4, got {k}")
        return

    if not spec.levels:
        raise InputError(f"family {spec.family!r} requires a level or level range")

    if spec.family == "gamma0":
        if len(spec.weights) != 1 or spec.weights[0] not in (1, 4):
            raise NotTabulatedError("Gamma_0 dimensions are available at weights 1 and 4 only")
        if spec.weights[0] == 4:
            bad = [N for N in spec.levels if N not in GAMMA0_WEIGHT4]
            if bad:
                raise NotTabulatedError(
                    f"weight-4 Gamma_0 dimensions cover levels {sorted(GAMMA0_WEIGHT4)}; got {bad}"
                )
        else:
            if any(N < 1 for N in spec.levels):
                raise InputError("levels must be positive")
    elif spec.family == "paramodular":
        if spec.weights and spec.weights != (4,):
            raise NotTabulatedError("paramodular dimensions are implemented at weight 4 only")
        bad = [N for N in spec.levels if not is_prime(N)]
        if bad:
            raise InputError(f"paramodular levels must be prime; got {bad}")
    else:  # principal
        if len(spec.weights) != 1 and len(spec.levels) != 1:
            raise InputError("fix either one weight or one level")
        if not spec.weights:
            raise InputError("a weight or weight range is required")
        for k in spec.weights:
            if k < 4:
                raise WeightOutOfRangeError(f"weight must be at least 4, got {k}")
        for N in spec.levels:
            if not is_prime(N):
                parse_square_free_level(N)  # raises with the offending prime


def build_rows(spec: TableSpec) -> tuple[str, list[tuple[int, int]]]:
    """Compute (axis name, [(parameter, dimension), ...]) for the spec."""
    _validate(spec)
    family = spec.family

    if family == "full":
        return "k", [(k, dim_full_level(k)) for k in spec.weights]

    if len(spec.weights) > 1:  # principal only: weight axis at a fixed level
        level = spec.levels[0]
        return "k", [(k, dim_principal_level(k, level)) for k in spec.weights]

    k = spec.weights[0] if spec.weights else 4
    axis = "p" if all(is_prime(N) for N in spec.levels) else "N"
    if family == "gamma0":
        rows = [(N, dim_gamma0(k, N)) for N in spec.levels]
    elif family == "paramodular":
        rows = [(N, dim_paramodular_weight4(N)) for N in spec.levels]
    else:
        rows = [(N, dim_principal_level(k, N)) for N in spec.levels]
    return axis, rows


def _grouped(n: int) -> str:
    return f"{n:,}"


def emit_table(spec: TableSpec) -> str:
    """Render the table; byte-identical output for identical specs."""
    axis, rows = build_rows(spec)

    if spec.fmt == "csv":
        lines = [f"{axis},dim"] + [f"{a},{d}" for a, d in rows]
        return "\n".join(lines) + "\n"

    if spec.fmt == "json":
        return json.dumps([{axis: a, "dim": d} for a, d in rows]) + "\n"

    if spec.fmt == "latex":
        header = " & ".join([f"${axis}$"] + [str(a) for a, _ in rows])
        values = " & ".join(["$\\dim$"] + [str(d) for _, d in rows])
        colspec = "|c||" + "c|" * len(rows)
        return (
            f"\\begin{{tabular}}{{{colspec}}}\n\\hline\n"
            f"{header} \\\\\n\\hline\\hline\n"
            f"{values} \\\\\n\\hline\n\\end{{tabular}}\n"
        )

    # text: aligned columns, optional digit grouping
    fmt = _grouped if spec.group_digits else str
    body = [(str(a), fmt(d)) for a, d in rows]
    wa = max(len(axis), max((len(a) for a, _ in body), default=0))
    wd = max(3, max((len(d) for _, d in body), default=0))
    lines = [f"{axis:>{wa}} {'dim':>{wd}}"]
    lines += [f"{a:>{wa}} {d:>{wd}}" for a, d in body]
    return "\n".join(lines) + "\n"
