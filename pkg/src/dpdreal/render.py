"""ASCII diagram of the real quotient line: image intervals, endpoint tags, empty regions.

Example (Klein bottle pair)::

    <....b[===========]b....>
         -1            1

``=`` marks arcs over which the fibers are real circles, ``.`` arcs with
empty real fibers.  Points: ``b[``/``]b`` and ``c[``/``]c`` are image
endpoints with their fiber tag, ``+`` a torsor point inside the image,
``:`` a torsor point with empty real fiber, ``o`` a puncture.  The ends
``<``/``>`` are the two sides of infinity (``o`` when infinity is removed).
"""

from __future__ import annotations

import os
import sys

from .fibers import FiberReport, RealFiberType

IMAGE_WIDTH = 11
EMPTY_WIDTH = 4

GREEN = "\x1b[32m"
DIM = "\x1b[2m"
BOLD = "\x1b[1m"
RESET = "\x1b[0m"


def _fill(arc) -> str:
    if arc.verdict is RealFiberType.TORSOR_REAL_CIRCLE:
        return "=" * IMAGE_WIDTH
    return "." * EMPTY_WIDTH


def _token(report: FiberReport, p, left_in: bool, right_in: bool) -> str:
    if not report.pair.curve.contains(p):
        return "o"
    t = report.point_type(p)
    if t.is_torsor:
        return "+" if t.has_real_points else ":"
    tag = t.tag
    if right_in and not left_in:
        return f"{tag}["
    if left_in and not right_in:
        return f"]{tag}"
    return tag


def render_diagram(report: FiberReport) -> str:
    """Two lines: the axis and the tick labels under each special point."""
    breaks = report.breaks
    arcs = report.arcs
    if not breaks:
        return _fill(arcs[0]).join("<>") + "\n"
    finite = [p for p in breaks if not p.is_infinite]
    inf_break = len(finite) < len(breaks)
    n = len(breaks)
    # arcs[k] runs from breaks[k] to breaks[k+1] (cyclically)
    in_image = [a.verdict is RealFiberType.TORSOR_REAL_CIRCLE for a in arcs]
    axis = ""
    ticks = []
    if inf_break:
        axis += "o" if not report.pair.curve.contains(breaks[-1]) else "<"
        axis += _fill(arcs[n - 1] if n > 1 else arcs[0])
    else:
        axis += "<" + _fill(arcs[n - 1])
    for k, p in enumerate(finite):
        before = in_image[k - 1]
        after = in_image[k]
        tok = _token(report, p, before, after)
        col = len(axis) + (1 if tok.startswith("]") else 0)
        ticks.append((col, str(p)))
        axis += tok
        if k < len(finite) - 1:
            axis += _fill(arcs[k])
    last = len(finite) - 1
    if finite:
        axis += _fill(arcs[last])
    if inf_break:
        axis += "o" if not report.pair.curve.contains(breaks[-1]) else ">"
    else:
        axis += ">"
    return axis + "\n" + _tick_line(ticks) + "\n"


def _tick_line(ticks) -> str:
    line = ""
    for col, label in ticks:
        if len(line) > col - 1 and line:
            col = len(line) + 1
        line += " " * (col - len(line)) + label
    return line


def color_enabled(stream=None) -> bool:
    flag = os.environ.get("DPD_COLOR")
    if flag == "0":
        return False
    if flag == "1":
        return True
    stream = stream or sys.stdout
    return hasattr(stream, "isatty") and stream.isatty()


def colorize(diagram: str) -> str:
    lines = diagram.split("\n")
    axis = lines[0]
    out = ""
    for ch in axis:
        if ch == "=":
            out += GREEN + ch + RESET
        elif ch == ".":
            out += DIM + ch + RESET
        elif ch in "bc[]+o":
            out += BOLD + ch + RESET
        else:
            out += ch
    return "\n".join([out] + lines[1:])
