"""Render eigenfunctions as filled contours with the nodal line overlaid.

Figures are written straight to file (SVG by default); the Agg backend keeps
this usable headless.
"""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .assembly import FEFunction  # noqa: E402


def save_mode_contour(u: FEFunction, path, title: str | None = None,
                      levels: int = 21) -> Path:
    """Filled contour of a nodal field with its zero level set drawn in red."""
    import matplotlib.tri as mtri

    mesh = u.mesh
    if mesh is None:
        raise ValueError("function has no mesh to plot on")
    tri = mtri.Triangulation(mesh.vertices[:, 0], mesh.vertices[:, 1], mesh.cells)
    peak = float(abs(u.values).max()) or 1.0

    fig, ax = plt.subplots(figsize=(5, 5))
    ax.tricontourf(tri, u.values, levels=levels, cmap="RdBu_r", vmin=-peak, vmax=peak)
    if u.values.min() < -1e-9 * peak < 1e-9 * peak < u.values.max():
        ax.tricontour(tri, u.values, levels=[0.0], colors="red", linewidths=1.5)
    if mesh.polygon is not None:
        xs = [p.x for p in mesh.polygon.vertices] + [mesh.polygon.vertices[0].x]
        ys = [p.y for p in mesh.polygon.vertices] + [mesh.polygon.vertices[0].y]
        ax.plot(xs, ys, color="black", linewidth=1.0)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def safe_filename(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "-", label).strip("-")
