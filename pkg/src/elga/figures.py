"""Figure data: sampled trajectories in affine-chart coordinates.

Three kinds are supported:

* ``circle-trajectory`` (el2): orbit of entity ``P`` under rotation around
  entity ``R``, sampled over a full period.
* ``clifford-parallels`` (el3): the parallels of entity ``line`` at the
  scene's ``figure.theta``, ``figure.parallels`` many per requested
  family, each swept along its length.
* ``rotation-flow`` (el3): orbits of every point-role entity under simple
  rotation around entity ``axis``.

Chart coordinates divide by the weight coefficient (e12 in el2, e123 in
el3); samples with |weight| < 1e-6 leave the chart and split the
polyline, so emitted polylines contain only finite coordinates.  The CSV
carries the raw normalised coefficients of every sample.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from . import el2, el3
from .algebra import Multivector, Space, exp_bivector, normalized
from .scene import Scene, SceneError

CHART_CUTOFF = 1e-6

FIGURE_KINDS = ("circle-trajectory", "clifford-parallels", "rotation-flow")


@dataclass
class FigureData:
    """Polylines (already projected to 2D) plus the raw sample table."""

    kind: str
    polylines: List[Tuple[str, List[Tuple[float, float]]]] = field(default_factory=list)
    markers: List[Tuple[str, Tuple[float, float]]] = field(default_factory=list)
    csv_header: Tuple[str, ...] = ()
    csv_rows: List[Tuple] = field(default_factory=list)

    def add_path(self, label: str, points: List[Tuple[float, float]]) -> None:
        # split already happened; drop degenerate fragments
        if len(points) >= 2:
            self.polylines.append((label, points))


def _entity(scene: Scene, name: str) -> Multivector:
    try:
        return scene.entities[name]
    except KeyError:
        raise SceneError(f"figure requires an entity named {name!r}")


def _chart_split(weights, coords):
    """Break a coordinate sequence wherever the weight leaves the chart."""
    runs, current = [], []
    for w, xy in zip(weights, coords):
        if abs(w) < CHART_CUTOFF:
            if current:
                runs.append(current)
            current = []
        else:
            current.append(xy)
    if current:
        runs.append(current)
    return runs


# fixed orthographic camera for el3 charts (yaw then pitch, drop depth)
_YAW, _PITCH = -0.9, -0.45
_CY, _SY = math.cos(_YAW), math.sin(_YAW)
_CP, _SP = math.cos(_PITCH), math.sin(_PITCH)


def _project3(x: float, y: float, z: float) -> Tuple[float, float]:
    u = _CY * x + _SY * y
    depth = -_SY * x + _CY * y
    v = _CP * z - _SP * depth
    return u, v


def _figure_circle(scene: Scene, samples: int) -> FigureData:
    if scene.space is not Space.EL2:
        raise SceneError("circle-trajectory requires an el2 scene")
    p = normalized(_entity(scene, "P"))
    r = normalized(_entity(scene, "R"))
    fig = FigureData(kind="circle-trajectory",
                     csv_header=("t", "e12", "e20", "e01"))
    ts = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    weights, coords = [], []
    for t in ts:
        x = el2.rotate(p, r, float(t))
        w = x.coeff("e12")
        fig.csv_rows.append((float(t), w, x.coeff("e20"), x.coeff("e01")))
        weights.append(w)
        if abs(w) >= CHART_CUTOFF:
            coords.append((x.coeff("e20") / w, x.coeff("e01") / w))
        else:
            coords.append((math.nan, math.nan))
    for i, run in enumerate(_chart_split(weights, coords)):
        fig.add_path(f"trajectory.{i}", run)
    if abs(r.coeff("e12")) >= CHART_CUTOFF:
        fig.markers.append(("R", (r.coeff("e20") / r.coeff("e12"),
                                  r.coeff("e01") / r.coeff("e12"))))
    return fig


def _sample_line(fig: FigureData, label: str, line: Multivector, samples: int,
                 row_prefix: Tuple) -> None:
    anchor = el3.point_on_line(line)
    ts = np.linspace(0.0, math.pi, samples)
    weights, coords = [], []
    for t in ts:
        x = el3.sweep_line_point(line, anchor, float(t))
        w = x.coeff("e123")
        fig.csv_rows.append(row_prefix + (float(t), w, x.coeff("e320"),
                                          x.coeff("e130"), x.coeff("e210")))
        weights.append(w)
        if abs(w) >= CHART_CUTOFF:
            coords.append(_project3(x.coeff("e320") / w, x.coeff("e130") / w,
                                    x.coeff("e210") / w))
        else:
            coords.append((math.nan, math.nan))
    for i, run in enumerate(_chart_split(weights, coords)):
        fig.add_path(f"{label}.{i}", run)


def _figure_parallels(scene: Scene, samples: int) -> FigureData:
    if scene.space is not Space.EL3:
        raise SceneError("clifford-parallels requires an el3 scene")
    line = _entity(scene, "line")
    params = scene.figure
    try:
        theta = float(params["theta"])
    except (KeyError, TypeError, ValueError):
        raise SceneError("clifford-parallels needs a numeric figure.theta")
    count = params.get("parallels", 32)
    if not isinstance(count, int) or count < 1:
        raise SceneError("figure.parallels must be a positive integer")
    family = params.get("family", "both")
    if family not in ("positive", "negative", "both"):
        raise SceneError("figure.family must be positive, negative or both")
    families = ("positive", "negative") if family == "both" else (family,)
    fig = FigureData(
        kind="clifford-parallels",
        csv_header=("family", "index", "phi", "t", "e123", "e320", "e130", "e210"),
    )
    _sample_line(fig, "line", normalized(line), samples, ("line", -1, math.nan))
    for fam in families:
        for i in range(count):
            phi = 2.0 * math.pi * i / count
            par = el3.clifford_parallel(normalized(line), fam, phi, theta)
            _sample_line(fig, f"{fam}.{i}", par, samples, (fam, i, phi))
    return fig


def _figure_rotation(scene: Scene, samples: int) -> FigureData:
    if scene.space is not Space.EL3:
        raise SceneError("rotation-flow requires an el3 scene")
    axis = normalized(_entity(scene, "axis"))
    seeds = [(name, mv) for name, mv in sorted(scene.entities.items())
             if scene.roles.get(name) == "point"]
    if not seeds:
        raise SceneError("rotation-flow needs at least one point-role entity")
    fig = FigureData(kind="rotation-flow",
                     csv_header=("seed", "t", "e123", "e320", "e130", "e210"))
    ts = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    for name, seed in seeds:
        p = normalized(seed)
        weights, coords = [], []
        for t in ts:
            s = exp_bivector(axis * (-0.5 * float(t)))
            x = s.apply(p)
            w = x.coeff("e123")
            fig.csv_rows.append((name, float(t), w, x.coeff("e320"),
                                 x.coeff("e130"), x.coeff("e210")))
            weights.append(w)
            if abs(w) >= CHART_CUTOFF:
                coords.append(_project3(x.coeff("e320") / w, x.coeff("e130") / w,
                                        x.coeff("e210") / w))
            else:
                coords.append((math.nan, math.nan))
        for i, run in enumerate(_chart_split(weights, coords)):
            fig.add_path(f"{name}.{i}", run)
    return fig


def build_figure(scene: Scene, kind: str, samples: int) -> FigureData:
    if samples < 1:
        raise SceneError("sample count must be a positive integer")
    if kind == "circle-trajectory":
        return _figure_circle(scene, samples)
    if kind == "clifford-parallels":
        return _figure_parallels(scene, samples)
    if kind == "rotation-flow":
        return _figure_rotation(scene, samples)
    raise SceneError(f"unknown figure kind {kind!r}")


# ---------------------------------------------------------------------------
# output


def write_csv(fig: FigureData, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(fig.csv_header)
        writer.writerows(fig.csv_rows)


def write_svg(fig: FigureData, path: str, size: int = 640) -> None:
    """Plain polyline rendering of the figure's chart data."""
    pts = [p for _, run in fig.polylines for p in run]
    pts += [p for _, p in fig.markers]
    if not pts:
        lo, hi = np.array([-1.0, -1.0]), np.array([1.0, 1.0])
    else:
        arr = np.array(pts)
        lo, hi = arr.min(axis=0), arr.max(axis=0)
    span = max(float(np.max(hi - lo)), 1e-9)
    pad = 0.05 * span
    lo = lo - pad
    span = span + 2 * pad
    scale = size / span

    def to_px(p):
        return ((p[0] - lo[0]) * scale, size - (p[1] - lo[1]) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for label, run in fig.polylines:
        path_pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(to_px, run))
        lines.append(
            f'<polyline fill="none" stroke="black" stroke-width="1" '
            f'points="{path_pts}"><title>{label}</title></polyline>'
        )
    for label, p in fig.markers:
        x, y = to_px(p)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black">'
                     f'<title>{label}</title></circle>')
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
