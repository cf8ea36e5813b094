"""Constructive splitting helpers shared by all three layout algorithms:
LPT two-bin weight partition, proportional rectangle splits, and the
vertical-cut width report used as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadWeights, TooFewItems
from .geometry import ConvexPolygon, Line, Rect, area_cut, clip_convex

#: LPT guarantee regimes: with every weight <= t * total,
#: the heavier bin is at most 2t * total for t in [3/10, 1/3) and at most
#: 2/3 * total for t in [1/3, 2/3].
LPT_LOW_T = 0.3
LPT_HIGH_T = 2.0 / 3.0


@dataclass(frozen=True)
class WeightSplit:
    """Two-bin partition of item indices; w1 >= w2 and w1 + w2 = total."""

    h1: tuple[int, ...]
    h2: tuple[int, ...]
    w1: float
    w2: float


def lpt_partition(weights: list[float]) -> WeightSplit:
    """Deterministic longest-processing-time two-bin partition.

    Items are taken in non-increasing weight order (ties by original index)
    and each is placed into the currently lighter bin (ties to bin 1).
    Output is normalized so that w1 >= w2.
    """
    if len(weights) < 2:
        raise TooFewItems(f"need at least 2 items, got {len(weights)}")
    order = sorted(range(len(weights)), key=lambda i: (-weights[i], i))
    bins: tuple[list[int], list[int]] = ([], [])
    totals = [0.0, 0.0]
    for i in order:
        b = 0 if totals[0] <= totals[1] else 1
        bins[b].append(i)
        totals[b] += weights[i]
    if totals[0] >= totals[1]:
        h1, h2, w1, w2 = bins[0], bins[1], totals[0], totals[1]
    else:
        h1, h2, w1, w2 = bins[1], bins[0], totals[1], totals[0]
    total = w1 + w2
    wmax = weights[order[0]]
    # Guarantee from the greedy analysis, asserted when a regime applies.
    if wmax <= LPT_HIGH_T * total + 1e-12 * total:
        if wmax < total / 3.0:
            bound = 2.0 * max(wmax, LPT_LOW_T * total)
        else:
            bound = (2.0 / 3.0) * total
        assert w1 <= bound + 1e-12 * total, (
            f"LPT bound violated: w1={w1}, bound={bound}, weights={weights}")
    return WeightSplit(tuple(h1), tuple(h2), w1, w2)


def split_rect(r: Rect, w1: float, w2: float) -> tuple[Rect, Rect]:
    """Cut ``r`` into two sub-rectangles with areas w1 and w2.

    The cut is a single straight line perpendicular to the longer side
    (ties cut vertically); the w1 piece is the left (resp. bottom) one.
    Both pieces keep aspect ratio at most max(asp(r), area(r)/wi).
    """
    if w1 <= 0.0 or w2 <= 0.0:
        raise BadWeights(f"weights must be positive: {w1}, {w2}")
    total = w1 + w2
    if abs(total - r.area) > 1e-9 * max(r.area, total):
        raise BadWeights(f"w1 + w2 = {total} does not match area {r.area}")
    f = w1 / total
    if r.width >= r.height:
        xc = r.x0 + f * r.width
        r1 = Rect(r.x0, r.y0, xc, r.y1)
        r2 = Rect(xc, r.y0, r.x1, r.y1)
    else:
        yc = r.y0 + f * r.height
        r1 = Rect(r.x0, r.y0, r.x1, yc)
        r2 = Rect(r.x0, yc, r.x1, r.y1)
    asp_r = max(r.width / r.height, r.height / r.width)
    for piece, w in ((r1, w1), (r2, w2)):
        asp = max(piece.width / piece.height, piece.height / piece.width)
        assert asp <= max(asp_r, r.area / w) + 1e-9, (
            f"rectangle split bound violated: asp={asp}, "
            f"bound={max(asp_r, r.area / w)}")
    return r1, r2


@dataclass(frozen=True)
class CutWidthReport:
    """Outcome of a vertical cut at a given area fraction (test oracle)."""

    cut_line: Line
    width_left: float
    width_right: float
    within_bounds: bool


def check_lemma5(p: ConvexPolygon, fraction: float) -> CutWidthReport:
    """Vertical area cut of a wide polygon at ``fraction`` in [1/3, 2/3].

    The larger piece is placed on the left (the convention that makes both
    piece widths land in [width/4, 3*width/4] for every convex polygon).
    Requires width(p) >= height(p).
    """
    if not (1.0 / 3.0 - 1e-12 <= fraction <= 2.0 / 3.0 + 1e-12):
        raise ValueError(f"fraction {fraction} outside [1/3, 2/3]")
    bb = p.bounding_box()
    if bb.width < bb.height:
        raise ValueError("check_lemma5 requires width >= height")
    left_fraction = max(fraction, 1.0 - fraction)
    # vertical directed line pointing up: negative side is x > cut
    line = area_cut(p, math.pi / 2, 1.0 - left_fraction)
    right_piece, left_piece = clip_convex(p, line)
    wl = left_piece.bounding_box().width
    wr = right_piece.bounding_box().width
    ok = (bb.width / 4.0 - 1e-9 <= wl <= 0.75 * bb.width + 1e-9
          and bb.width / 4.0 - 1e-9 <= wr <= 0.75 * bb.width + 1e-9)
    return CutWidthReport(line, wl, wr, ok)
