"""Deterministic board renderer for compositions (ASCII and SVG).

Output depends only on the composition and the RenderSpec; no timestamps,
locale, or randomness, so golden files can compare bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import encode
from .core import Composition, DomainError, check_composition

CELL_PX = 40

FORMATS = ("ascii", "svg")
SHADINGS = ("none", "even-gray")
ANNOTATIONS = ("none", "cutjoin", "lengths")


@dataclass(frozen=True)
class RenderSpec:
    fmt: str = "ascii"
    shading: str = "none"
    annotation: str = "none"

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise DomainError(f"unknown format {self.fmt!r}")
        if self.shading not in SHADINGS:
            raise DomainError(f"unknown shading {self.shading!r}")
        if self.annotation not in ANNOTATIONS:
            raise DomainError(f"unknown annotation {self.annotation!r}")


def render(c: Composition, spec: RenderSpec = RenderSpec()) -> str:
    """Render the tiling of c; returns text ending in a newline."""
    check_composition(c)
    if not c:
        raise DomainError("the empty composition has no board to render")
    if spec.fmt == "svg":
        return _render_svg(c, spec)
    return _render_ascii(c, spec)


def _render_ascii(c: Composition, spec: RenderSpec) -> str:
    chars = ["|"]
    boundary_cols: list[int] = []  # column of each interior cell boundary
    tile_spans: list[tuple[int, int]] = []  # (first col, last col) per tile
    n = sum(c)
    cell = 0
    for part in c:
        fill = "=" if spec.shading == "even-gray" and part % 2 == 0 else "#"
        start = len(chars)
        for _ in range(part):
            chars.append(fill)
            cell += 1
            if cell < n:
                boundary_cols.append(len(chars))
        tile_spans.append((start, len(chars) - 1))
        chars.append("|")
        if cell < n:
            # the cut bar itself marks this boundary
            boundary_cols[-1] = len(chars) - 1
    board = "".join(chars)
    lines = [board]
    if spec.annotation == "cutjoin":
        row = [" "] * len(board)
        for col, letter in zip(boundary_cols, encode(c).letters):
            row[col] = letter
        lines.append("".join(row).rstrip())
    elif spec.annotation == "lengths":
        row = [" "] * len(board)
        for part, (lo, hi) in zip(c, tile_spans):
            label = str(part)
            start = (lo + hi) // 2 - (len(label) - 1) // 2
            for i, ch in enumerate(label):
                row[start + i] = ch
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"


def _render_svg(c: Composition, spec: RenderSpec) -> str:
    n = sum(c)
    annotated = spec.annotation != "none"
    width = CELL_PX * n + 2
    height = CELL_PX + 2 + (20 if spec.annotation == "cutjoin" else 0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    x = 1
    for part in c:
        fill = "#cccccc" if spec.shading == "even-gray" and part % 2 == 0 else "#ffffff"
        w = CELL_PX * part
        out.append(
            f'  <rect x="{x}" y="1" width="{w}" height="{CELL_PX}" rx="6" '
            f'fill="{fill}" stroke="#000000" stroke-width="2"/>'
        )
        if spec.annotation == "lengths":
            out.append(
                f'  <text x="{x + w // 2}" y="{1 + CELL_PX // 2 + 5}" '
                f'font-family="monospace" font-size="16" '
                f'text-anchor="middle">{part}</text>'
            )
        x += w
    if spec.annotation == "cutjoin":
        for i, letter in enumerate(encode(c).letters, start=1):
            out.append(
                f'  <text x="{1 + CELL_PX * i}" y="{CELL_PX + 17}" '
                f'font-family="monospace" font-size="16" '
                f'text-anchor="middle">{letter}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
