"""Rectangular parameter sweeps producing machine-readable region grids.

A sweep fixes the squeeze parameter of a resource family and scans two
axes (tmst: k1, k2; bs: k, T), evaluating the EPR uncertainty, det M,
fidelity and the three verdict flags at every grid point.  Rows are
ordered with axis2 varying fastest and serialise to CSV (header
axis1,axis2,delta_epr,f_epr,det_m,fidelity,entangled,epr,qt,class,
booleans as 0/1) or JSON (booleans true/false).  Identical configurations
produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import core, criteria, resources
from .core import PHYSICALITY_TOL, fmt17
from .errors import GridSizeError, InvalidInput

__all__ = [
    "MAX_GRID_POINTS",
    "AxisSpec",
    "SweepConfig",
    "RegionGrid",
    "run_sweep",
]

MAX_GRID_POINTS = 4_000_000

_FAMILY_AXES = {"tmst": ("k1", "k2"), "bs": ("k", "T")}

_CSV_HEADER = "axis1,axis2,delta_epr,f_epr,det_m,fidelity,entangled,epr,qt,class"

_CHUNK = 1 << 17


@dataclass(frozen=True)
class AxisSpec:
    """One sweep axis: steps points from lo to hi inclusive."""

    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise InvalidInput(f"axis {self.name!r} needs finite min < max")
        if not (isinstance(self.steps, int) and self.steps >= 2):
            raise InvalidInput(f"axis {self.name!r} needs an integer steps >= 2")

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    family: str
    fixed: dict
    axis1: AxisSpec
    axis2: AxisSpec
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.family not in _FAMILY_AXES:
            raise InvalidInput(f"family must be one of {tuple(_FAMILY_AXES)}")
        names = (self.axis1.name, self.axis2.name)
        if names != _FAMILY_AXES[self.family]:
            raise InvalidInput(
                f"axes for family {self.family!r} must be {_FAMILY_AXES[self.family]}, got {names}"
            )
        if "r" not in self.fixed:
            raise InvalidInput('fixed parameters must include "r"')
        r = self.fixed["r"]
        if not (isinstance(r, (int, float)) and math.isfinite(r) and r >= 0):
            raise InvalidInput("fixed r must be >= 0")
        if self.format not in ("csv", "json"):
            raise InvalidInput('format must be "csv" or "json"')
        lo1, lo2 = self.axis1.lo, self.axis2.lo
        if self.family == "tmst":
            if lo1 < 0.5 or lo2 < 0.5:
                raise InvalidInput("k1 and k2 axes must start at >= 1/2")
        else:
            if lo1 < 0.5:
                raise InvalidInput("k axis must start at >= 1/2")
            if lo2 <= 0.0 or self.axis2.hi >= 1.0:
                raise InvalidInput("T axis must stay strictly inside (0, 1)")
        if self.size > MAX_GRID_POINTS:
            raise GridSizeError(
                f"grid of {self.size} points exceeds the {MAX_GRID_POINTS} point budget"
            )

    @property
    def size(self) -> int:
        return self.axis1.steps * self.axis2.steps


@dataclass(frozen=True)
class RegionGrid:
    """Evaluated sweep: column arrays in row order (axis2 fastest)."""

    config: SweepConfig
    axis1: np.ndarray
    axis2: np.ndarray
    delta_epr: np.ndarray = field(repr=False)
    f_epr: np.ndarray = field(repr=False)
    det_m: np.ndarray = field(repr=False)
    fidelity: np.ndarray = field(repr=False)
    entangled: np.ndarray = field(repr=False)
    epr: np.ndarray = field(repr=False)
    qt: np.ndarray = field(repr=False)
    labels: np.ndarray = field(repr=False)

    @property
    def n_rows(self) -> int:
        return self.axis1.size

    def to_csv(self) -> str:
        lines = [_CSV_HEADER]
        for i in range(self.n_rows):
            lines.append(
                f"{fmt17(self.axis1[i])},{fmt17(self.axis2[i])},"
                f"{fmt17(self.delta_epr[i])},{fmt17(self.f_epr[i])},"
                f"{fmt17(self.det_m[i])},{fmt17(self.fidelity[i])},"
                f"{int(self.entangled[i])},{int(self.epr[i])},{int(self.qt[i])},"
                f"{self.labels[i]}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        cfg = self.config
        head = (
            '{\n  "config": {'
            f'"family": "{cfg.family}", '
            f'"fixed": {{"r": {fmt17(cfg.fixed["r"])}}}, '
            f'"axis1": {_axis_json(cfg.axis1)}, '
            f'"axis2": {_axis_json(cfg.axis2)}'
            "},\n"
            '  "rows": [\n'
        )
        rows = []
        for i in range(self.n_rows):
            rows.append(
                "    {"
                f'"axis1": {fmt17(self.axis1[i])}, '
                f'"axis2": {fmt17(self.axis2[i])}, '
                f'"delta_epr": {fmt17(self.delta_epr[i])}, '
                f'"f_epr": {fmt17(self.f_epr[i])}, '
                f'"det_m": {fmt17(self.det_m[i])}, '
                f'"fidelity": {fmt17(self.fidelity[i])}, '
                f'"entangled": {criteria._bool_token(self.entangled[i])}, '
                f'"epr": {criteria._bool_token(self.epr[i])}, '
                f'"qt": {criteria._bool_token(self.qt[i])}, '
                f'"class": "{self.labels[i]}"'
                "}"
            )
        return head + ",\n".join(rows) + "\n  ]\n}\n"

    def to_text(self, fmt: str | None = None) -> str:
        fmt = self.config.format if fmt is None else fmt
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise InvalidInput('format must be "csv" or "json"')

    def write(self, path, fmt: str | None = None) -> None:
        text = self.to_text(fmt)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _axis_json(a: AxisSpec) -> str:
    return (
        f'{{"name": "{a.name}", "min": {fmt17(a.lo)}, '
        f'"max": {fmt17(a.hi)}, "steps": {a.steps}}}'
    )


def run_sweep(config: SweepConfig) -> RegionGrid:
    """Evaluate the grid.  Vectorised in chunks; deterministic row order
    with axis2 fastest regardless of chunking."""
    v1 = config.axis1.values()
    v2 = config.axis2.values()
    X1, X2 = np.meshgrid(v1, v2, indexing="ij")
    a1 = X1.ravel()
    a2 = X2.ravel()
    n = a1.size
    r = float(config.fixed["r"])

    delta = np.empty(n)
    detm = np.empty(n)
    fid = np.empty(n)
    ent = np.empty(n, dtype=bool)

    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        if config.family == "tmst":
            V = resources.tmst_covmat(r, a1[lo:hi], a2[lo:hi])
        else:
            V = resources.bs_covmat(r, a1[lo:hi], a2[lo:hi])
        delta[lo:hi] = criteria._delta_raw(V)
        d = core._det2(criteria._m_raw(V))
        detm[lo:hi] = d
        fid[lo:hi] = 1.0 / np.sqrt(d)
        ent[lo:hi] = core.ppt_nu_minus(V) < 0.5 - PHYSICALITY_TOL

    f_epr = np.maximum(0.0, 2.0 - delta)
    epr = delta < 2.0
    qt = detm < 4.0
    labels = np.where(
        ~ent,
        criteria.Classification.SEPARABLE.value,
        np.where(
            epr,
            criteria.Classification.EPR_CORRELATED.value,
            np.where(
                qt,
                criteria.Classification.QT_NO_EPR.value,
                criteria.Classification.ENTANGLED_NO_QT.value,
            ),
        ),
    )
    return RegionGrid(
        config=config,
        axis1=a1,
        axis2=a2,
        delta_epr=delta,
        f_epr=f_epr,
        det_m=detm,
        fidelity=fid,
        entangled=ent,
        epr=epr,
        qt=qt,
        labels=labels,
    )
