"""OBJ and CSV export of sampled polar grids.

Vertices are written row-major (radius index outer, angle index inner) and
numbered from 1. A grid through r = 0 of a surface with a branch point there
produces repeated vertices and degenerate faces; they are kept as is so the
face layout depends only on the grid shape.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np


def _check_grid(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 3 or pts.shape[2] != 3:
        raise ValueError(f"expected an (nr, ntheta, 3) grid, got shape {pts.shape}")
    if pts.shape[0] < 2 or pts.shape[1] < 2:
        raise ValueError("grid must be at least 2 x 2")
    return pts + 0.0  # turns -0.0 into 0.0


def obj_text(points, comment: str | None = None) -> str:
    pts = _check_grid(points)
    nr, nt, _ = pts.shape
    buf = io.StringIO()
    if comment:
        for line in comment.splitlines():
            buf.write(f"# {line}\n")
    for x, y, z in pts.reshape(-1, 3):
        buf.write("v %.9g %.9g %.9g\n" % (x, y, z))
    for i in range(nr - 1):
        for j in range(nt - 1):
            a = i * nt + j + 1
            b = a + 1
            c = b + nt
            d = a + nt
            buf.write(f"f {a} {b} {c} {d}\n")
    return buf.getvalue()


def write_obj(path, points, comment: str | None = None) -> None:
    Path(path).write_text(obj_text(points, comment), encoding="utf-8", newline="\n")


def csv_text(r_values, theta_values, points) -> str:
    pts = _check_grid(points)
    r_values = np.asarray(r_values, float)
    theta_values = np.asarray(theta_values, float)
    if pts.shape[:2] != (len(r_values), len(theta_values)):
        raise ValueError("grid shape does not match the sample axes")
    buf = io.StringIO()
    buf.write("r,theta,x,y,z\n")
    for i, r in enumerate(r_values):
        for j, t in enumerate(theta_values):
            x, y, z = pts[i, j]
            buf.write("%.9g,%.9g,%.9g,%.9g,%.9g\n" % (r, t, x, y, z))
    return buf.getvalue()


def write_csv(path, r_values, theta_values, points) -> None:
    Path(path).write_text(csv_text(r_values, theta_values, points), encoding="utf-8",
                          newline="\n")
