"""Geometric kernel: polygons, aspect ratios, shape predicates, cuts.

Coordinates are double-precision reals over the unit square. Two tolerance
conventions are used throughout:

* angular tolerance ``ANGLE_TOL`` (1e-9 rad) decides whether an edge counts
  as axis-parallel and whether two edges count as parallel;
* collinear vertices (turn angle below ``ANGLE_TOL``) are merged when a
  polygon is constructed.

All polygon vertices are stored counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DegeneratePolygon, NoIntersection, NotOrthoconvex

ANGLE_TOL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


class Corner(Enum):
    BOTTOM_LEFT = "bottomLeft"
    BOTTOM_RIGHT = "bottomRight"
    TOP_LEFT = "topLeft"
    TOP_RIGHT = "topRight"


@dataclass(frozen=True)
class ShapeClass:
    """Shape tag: rectangle / lShape / sShape / staircase(anchor) / other."""

    kind: str
    anchor: Optional[Corner] = None

    @property
    def label(self) -> str:
        if self.anchor is not None:
            return f"{self.kind}({self.anchor.value})"
        return self.kind


RECTANGLE = ShapeClass("rectangle")
L_SHAPE = ShapeClass("lShape")
S_SHAPE = ShapeClass("sShape")
ORTHO_OTHER = ShapeClass("orthoOther")
CONVEX = ShapeClass("convex")


def staircase_class(anchor: Corner) -> ShapeClass:
    return ShapeClass("staircase", anchor)


# ---------------------------------------------------------------------------
# Rect
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rect:
    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self):
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise DegeneratePolygon(f"rect with non-positive extent: {self}")

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height

    def corner_point(self, corner: Corner) -> Point:
        if corner is Corner.BOTTOM_LEFT:
            return Point(self.x0, self.y0)
        if corner is Corner.BOTTOM_RIGHT:
            return Point(self.x1, self.y0)
        if corner is Corner.TOP_LEFT:
            return Point(self.x0, self.y1)
        return Point(self.x1, self.y1)

    def corners_ccw(self) -> list[Point]:
        return [Point(self.x0, self.y0), Point(self.x1, self.y0),
                Point(self.x1, self.y1), Point(self.x0, self.y1)]

    def contains(self, p: Point, tol: float = 1e-9) -> bool:
        return (self.x0 - tol <= p.x <= self.x1 + tol
                and self.y0 - tol <= p.y <= self.y1 + tol)


def unit_square() -> Rect:
    return Rect(0.0, 0.0, 1.0, 1.0)


# ---------------------------------------------------------------------------
# Polygon normalization helpers
# ---------------------------------------------------------------------------

def _shoelace(vertices: Sequence[Point]) -> float:
    s = 0.0
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        s += ax * by - ay * bx
    return 0.5 * s


def _dedupe(vertices: Sequence[Point], tol: float = 1e-14) -> list[Point]:
    out: list[Point] = []
    for p in vertices:
        if out and abs(p.x - out[-1].x) <= tol and abs(p.y - out[-1].y) <= tol:
            continue
        out.append(Point(float(p[0]), float(p[1])))
    while len(out) > 1 and abs(out[0].x - out[-1].x) <= tol and abs(out[0].y - out[-1].y) <= tol:
        out.pop()
    return out

def _merge_collinear(vertices: list[Point], angle_tol: float = ANGLE_TOL) -> list[Point]:
    changed = True
    while changed and len(vertices) > 2:
        changed = False
        n = len(vertices)
        kept: list[Point] = []
        i = 0
        while i < n:
            a = vertices[(i - 1) % n]
            b = vertices[i]
            c = vertices[(i + 1) % n]
            ux, uy = b.x - a.x, b.y - a.y
            vx, vy = c.x - b.x, c.y - b.y
            cross = ux * vy - uy * vx
            dot = ux * vx + uy * vy
            turn = math.atan2(abs(cross), dot)
            # turn close to 0 means b lies (nearly) on segment a-c
            if turn < angle_tol:
                changed = True
                i += 1
                continue
            kept.append(b)
            i += 1
        vertices = kept if kept else vertices
        if not changed:
            break
    return vertices


# ---------------------------------------------------------------------------
# ConvexPolygon
# ---------------------------------------------------------------------------

class ConvexPolygon:
    """Strictly convex polygon, CCW vertex order, collinear vertices merged."""

    __slots__ = ("vertices", "_area", "_bbox")

    def __init__(self, vertices: Iterable[Point]):
        pts = _dedupe([Point(float(p[0]), float(p[1])) for p in vertices])
        if len(pts) < 3:
            raise DegeneratePolygon("convex polygon needs at least 3 distinct vertices")
        if _shoelace(pts) < 0:
            pts.reverse()
        pts = _merge_collinear(pts)
        if len(pts) < 3:
            raise DegeneratePolygon("polygon collapsed after collinear merge")
        a = _shoelace(pts)
        if a <= 0.0:
            raise DegeneratePolygon(f"non-positive area {a}")
        n = len(pts)
        for i in range(n):
            p0 = pts[(i - 1) % n]
            p1 = pts[i]
            p2 = pts[(i + 1) % n]
            cross = (p1.x - p0.x) * (p2.y - p1.y) - (p1.y - p0.y) * (p2.x - p1.x)
            if cross <= 0.0:
                raise DegeneratePolygon(f"not strictly convex at vertex {i}")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self._area = a
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        self._bbox = (min(xs), min(ys), max(xs), max(ys))

    def __repr__(self) -> str:
        return f"ConvexPolygon({list(self.vertices)!r})"

    @property
    def area(self) -> float:
        return self._area

    def bounding_box(self) -> Rect:
        x0, y0, x1, y1 = self._bbox
        return Rect(x0, y0, x1, y1)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def rect_polygon(r: Rect) -> ConvexPolygon:
    return ConvexPolygon(r.corners_ccw())


# ---------------------------------------------------------------------------
# OrthoPolygon
# ---------------------------------------------------------------------------

class OrthoPolygon:
    """Simple rectilinear polygon, CCW, edges alternating horizontal/vertical.

    Construction snaps almost-axis-parallel edges (within ANGLE_TOL) onto the
    axes and merges collinear runs, so edges strictly alternate.
    """

    __slots__ = ("vertices", "_area", "_bbox")

    def __init__(self, vertices: Iterable[Point]):
        pts = _dedupe([Point(float(p[0]), float(p[1])) for p in vertices])
        if len(pts) < 4:
            raise DegeneratePolygon("rectilinear polygon needs at least 4 vertices")
        if _shoelace(pts) < 0:
            pts.reverse()
        pts = self._snap_axis(pts)
        pts = self._merge_axis_collinear(pts)
        if len(pts) < 4:
            raise DegeneratePolygon("polygon collapsed after axis merge")
        a = _shoelace(pts)
        if a <= 0.0:
            raise DegeneratePolygon(f"non-positive area {a}")
        n = len(pts)
        for i in range(n):
            b = pts[(i + 1) % n]
            p = pts[i]
            horiz = p.y == b.y
            q = pts[(i + 2) % n]
            next_horiz = b.y == q.y
            if horiz == next_horiz:
                raise DegeneratePolygon("edges do not alternate horizontal/vertical")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self._area = a
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        self._bbox = (min(xs), min(ys), max(xs), max(ys))

    @staticmethod
    def _snap_axis(pts: list[Point]) -> list[Point]:
        n = len(pts)
        out = list(pts)
        for i in range(n):
            p = out[i]
            q = out[(i + 1) % n]
            dx, dy = q.x - p.x, q.y - p.y
            adx, ady = abs(dx), abs(dy)
            if adx <= ady:
                if adx > ANGLE_TOL * max(1.0, ady):
                    raise DegeneratePolygon(
                        f"edge {p}->{q} is not axis-parallel within tolerance")
                if adx != 0.0:
                    out[(i + 1) % n] = Point(p.x, q.y)
            else:
                if ady > ANGLE_TOL * max(1.0, adx):
                    raise DegeneratePolygon(
                        f"edge {p}->{q} is not axis-parallel within tolerance")
                if ady != 0.0:
                    out[(i + 1) % n] = Point(q.x, p.y)
        return _dedupe(out)

    @staticmethod
    def _merge_axis_collinear(pts: list[Point]) -> list[Point]:
        changed = True
        while changed and len(pts) > 2:
            changed = False
            n = len(pts)
            kept = []
            for i in range(n):
                a = pts[(i - 1) % n]
                b = pts[i]
                c = pts[(i + 1) % n]
                if (a.y == b.y == c.y) or (a.x == b.x == c.x):
                    changed = True
                    continue
                kept.append(b)
            pts = kept if kept else pts
        return pts

    def __repr__(self) -> str:
        return f"OrthoPolygon({list(self.vertices)!r})"

    @property
    def area(self) -> float:
        return self._area

    def bounding_box(self) -> Rect:
        x0, y0, x1, y1 = self._bbox
        return Rect(x0, y0, x1, y1)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def reflex_vertices(self) -> list[Point]:
        out = []
        v = self.vertices
        n = len(v)
        for i in range(n):
            p0, p1, p2 = v[(i - 1) % n], v[i], v[(i + 1) % n]
            cross = (p1.x - p0.x) * (p2.y - p1.y) - (p1.y - p0.y) * (p2.x - p1.x)
            if cross < 0.0:
                out.append(p1)
        return out

    def is_simple(self) -> bool:
        """O(n^2) boundary self-intersection test (used on external input)."""
        edges = self.edges()
        n = len(edges)
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                if _axis_segments_touch(edges[i], edges[j]):
                    return False
        return True


def _axis_segments_touch(e1: tuple[Point, Point], e2: tuple[Point, Point]) -> bool:
    (a, b), (c, d) = e1, e2
    ax0, ax1 = min(a.x, b.x), max(a.x, b.x)
    ay0, ay1 = min(a.y, b.y), max(a.y, b.y)
    bx0, bx1 = min(c.x, d.x), max(c.x, d.x)
    by0, by1 = min(c.y, d.y), max(c.y, d.y)
    return ax0 <= bx1 and bx0 <= ax1 and ay0 <= by1 and by0 <= ay1


def rect_ortho(r: Rect) -> OrthoPolygon:
    return OrthoPolygon(r.corners_ccw())


# ---------------------------------------------------------------------------
# Areas and aspect ratios
# ---------------------------------------------------------------------------

def area(p) -> float:
    """Shoelace area of a polygon (or a Rect)."""
    if isinstance(p, Rect):
        return p.area
    return p.area


def asp_ortho(p) -> float:
    """Area of the smallest enclosing axis-aligned square over the area.

    For a rectangle this equals max(w/h, h/w).
    """
    if isinstance(p, Rect):
        side = max(p.width, p.height)
        return side * side / p.area
    bb = p.bounding_box()
    side = max(bb.width, bb.height)
    return side * side / p.area


def diameter(p: ConvexPolygon) -> float:
    """Max pairwise vertex distance (the diameter, for a convex polygon)."""
    v = p.vertices
    best = 0.0
    for i in range(len(v)):
        xi, yi = v[i]
        for j in range(i + 1, len(v)):
            d = (v[j].x - xi) ** 2 + (v[j].y - yi) ** 2
            if d > best:
                best = d
    return math.sqrt(best)


def asp_convex(p: ConvexPolygon) -> float:
    """Squared diameter over area."""
    d = diameter(p)
    return d * d / p.area


# ---------------------------------------------------------------------------
# Orthoconvexity / shape classes / staircases
# ---------------------------------------------------------------------------

def _cyclic_sign_blocks(signs: list[int]) -> int:
    """Number of maximal blocks of equal sign in a cyclic sequence."""
    if not signs:
        return 0
    blocks = 0
    n = len(signs)
    for i in range(n):
        if signs[i] != signs[(i - 1) % n]:
            blocks += 1
    return max(blocks, 1)


def is_orthoconvex(p: OrthoPolygon) -> bool:
    """True iff every axis-parallel line meets the polygon in one segment.

    Equivalent: the horizontal edges form at most one rightward and one
    leftward run around the boundary, and likewise for vertical edges.
    """
    hsigns = []
    vsigns = []
    for a, b in p.edges():
        if a.y == b.y:
            hsigns.append(1 if b.x > a.x else -1)
        else:
            vsigns.append(1 if b.y > a.y else -1)
    return _cyclic_sign_blocks(hsigns) <= 2 and _cyclic_sign_blocks(vsigns) <= 2


def is_staircase(p: OrthoPolygon, anchor: Corner, tol: float = 1e-9) -> bool:
    """True iff ``anchor``'s bounding-box corner is a vertex v with incident
    horizontal edge uv and vertical edge vw, and the boundary chain from u to
    w avoiding v is monotone in both x and y."""
    bb = p.bounding_box()
    cpt = bb.corner_point(anchor)
    v = p.vertices
    n = len(v)
    idx = None
    for i, q in enumerate(v):
        if abs(q.x - cpt.x) <= tol and abs(q.y - cpt.y) <= tol:
            idx = i
            break
    if idx is None:
        return False
    # edges alternate, so one incident edge is horizontal and one vertical;
    # the chain is the whole vertex cycle minus v, walked from u to w.
    chain = [v[(idx + k) % n] for k in range(1, n)]
    prev_horiz = v[(idx - 1) % n].y == v[idx].y
    if not prev_horiz:
        # u must be the horizontal neighbour: walk the other way round
        chain.reverse()
    xs = [q.x for q in chain]
    ys = [q.y for q in chain]
    return _monotone(xs, tol) and _monotone(ys, tol)


def _monotone(values: list[float], tol: float) -> bool:
    inc = all(values[i + 1] >= values[i] - tol for i in range(len(values) - 1))
    dec = all(values[i + 1] <= values[i] + tol for i in range(len(values) - 1))
    return inc or dec


def classify_shape(p: OrthoPolygon) -> ShapeClass:
    """Classify an orthoconvex polygon by its reflex-corner census."""
    if not is_orthoconvex(p):
        raise NotOrthoconvex("shape classification requires an orthoconvex polygon")
    reflex = len(p.reflex_vertices())
    if reflex == 0:
        return RECTANGLE
    if reflex == 1:
        return L_SHAPE
    if reflex == 2:
        return S_SHAPE
    for corner in (Corner.BOTTOM_LEFT, Corner.BOTTOM_RIGHT,
                   Corner.TOP_LEFT, Corner.TOP_RIGHT):
        if is_staircase(p, corner):
            return staircase_class(corner)
    return ORTHO_OTHER


# ---------------------------------------------------------------------------
# Directed lines and convex clipping
# ---------------------------------------------------------------------------

class Line(NamedTuple):
    """Directed line through ``point`` at ``angle`` (radians).

    The *negative side* is the right-hand side of the direction of travel:
    points q with dot(n, q - point) < 0 for n = (-sin a, cos a).
    """

    point: Point
    angle: float

    @property
    def direction(self) -> Point:
        return Point(math.cos(self.angle), math.sin(self.angle))

    @property
    def normal(self) -> Point:
        return Point(-math.sin(self.angle), math.cos(self.angle))


def signed_side(line: Line, q: Point) -> float:
    n = line.normal
    return n.x * (q.x - line.point.x) + n.y * (q.y - line.point.y)


def clip_convex(p: ConvexPolygon, line: Line) -> tuple[ConvexPolygon, ConvexPolygon]:
    """Split a convex polygon by a directed line.

    Returns ``(neg, pos)``: the piece on the negative (right) side and the
    piece on the positive (left) side. Raises NoIntersection when the line
    misses the interior.
    """
    eps = 1e-14
    verts = p.vertices
    n = len(verts)
    sides = [signed_side(line, q) for q in verts]
    if all(s >= -eps for s in sides) or all(s <= eps for s in sides):
        raise NoIntersection("line does not properly intersect polygon interior")
    neg: list[Point] = []
    pos: list[Point] = []
    for i in range(n):
        a, sa = verts[i], sides[i]
        b, sb = verts[(i + 1) % n], sides[(i + 1) % n]
        if sa <= eps:
            neg.append(a)
        if sa >= -eps:
            pos.append(a)
        if (sa < -eps and sb > eps) or (sa > eps and sb < -eps):
            t = sa / (sa - sb)
            ip = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            neg.append(ip)
            pos.append(ip)
    try:
        return ConvexPolygon(neg), ConvexPolygon(pos)
    except DegeneratePolygon as exc:
        raise NoIntersection(f"clip produced a degenerate piece: {exc}") from exc


def _halfplane_area(p: ConvexPolygon, normal: Point, offset: float) -> float:
    """Area of {q in p : dot(normal, q) <= offset}, exact up to float error."""
    verts = p.vertices
    n = len(verts)
    ts = [normal.x * q.x + normal.y * q.y for q in verts]
    poly: list[Point] = []
    for i in range(n):
        a, ta = verts[i], ts[i]
        b, tb = verts[(i + 1) % n], ts[(i + 1) % n]
        if ta <= offset:
            poly.append(a)
        if (ta < offset < tb) or (tb < offset < ta):
            t = (offset - ta) / (tb - ta)
            poly.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    if len(poly) < 3:
        return 0.0
    return abs(_shoelace(poly))


def area_cut(p: ConvexPolygon, angle: float, fraction: float) -> Line:
    """Directed line at ``angle`` whose negative side cuts off
    ``fraction * area(p)``.

    The offset is solved on the exact piecewise-quadratic area profile
    (3-point quadratic fit per slab, which is exact for convex polygons),
    with a bisection fallback; relative tolerance 1e-12.
    """
    if not (0.0 < fraction < 1.0):
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    nrm = Point(-math.sin(angle), math.cos(angle))
    total = p.area
    target = fraction * total
    ts = sorted({nrm.x * q.x + nrm.y * q.y for q in p.vertices})
    lo_t, hi_t = ts[0], ts[-1]

    def area_at(t: float) -> float:
        return _halfplane_area(p, nrm, t)

    # locate the slab containing the target area
    lo, hi = lo_t, hi_t
    lo_a, hi_a = 0.0, total
    for i in range(len(ts) - 1):
        a_next = area_at(ts[i + 1])
        if a_next >= target:
            lo, hi = ts[i], ts[i + 1]
            lo_a, hi_a = area_at(ts[i]), a_next
            break
    # exact quadratic through the slab endpoints and midpoint
    t_sol = None
    if hi > lo:
        tm = 0.5 * (lo + hi)
        am = area_at(tm)
        # Lagrange coefficients for A(t) = c2 t^2 + c1 t + c0 on [lo, hi]
        d0 = (lo - tm) * (lo - hi)
        d1 = (tm - lo) * (tm - hi)
        d2 = (hi - lo) * (hi - tm)
        c2 = lo_a / d0 + am / d1 + hi_a / d2
        c1 = (-lo_a * (tm + hi) / d0 - am * (lo + hi) / d1 - hi_a * (lo + tm) / d2)
        c0 = (lo_a * tm * hi / d0 + am * lo * hi / d1 + hi_a * lo * tm / d2)
        cc = c0 - target
        if abs(c2) < 1e-13 * max(1.0, abs(c1)):
            if c1 != 0.0:
                t_sol = -cc / c1
        else:
            disc = c1 * c1 - 4.0 * c2 * cc
            if disc >= 0.0:
                sq = math.sqrt(disc)
                for cand in ((-c1 + sq) / (2 * c2), (-c1 - sq) / (2 * c2)):
                    if lo - 1e-12 <= cand <= hi + 1e-12:
                        t_sol = min(max(cand, lo), hi)
                        break
    if t_sol is None or abs(area_at(t_sol) - target) > 1e-12 * total:
        # bisection fallback on the monotone profile
        blo, bhi = lo, hi
        alo = area_at(blo)
        for _ in range(200):
            mid = 0.5 * (blo + bhi)
            am = area_at(mid)
            if abs(am - target) <= 1e-13 * total:
                blo = bhi = mid
                break
            if am < target:
                blo, alo = mid, am
            else:
                bhi = mid
        t_sol = 0.5 * (blo + bhi)
    return Line(Point(nrm.x * t_sol, nrm.y * t_sol), angle)


# ---------------------------------------------------------------------------
# Edge direction census (used by the convex layout invariants)
# ---------------------------------------------------------------------------

def edge_angle(a: Point, b: Point) -> float:
    """Direction of the edge a->b as an angle in [0, pi)."""
    ang = math.atan2(b.y - a.y, b.x - a.x)
    if ang < 0:
        ang += math.pi
    if ang >= math.pi:
        ang -= math.pi
    return ang


def axis_angle_distance(ang: float) -> float:
    """Angular distance (mod pi) from ``ang`` to the nearest axis direction."""
    return min(_angdist(ang, 0.0), _angdist(ang, math.pi / 2))


def _angdist(a: float, b: float) -> float:
    d = abs(a - b) % math.pi
    return min(d, math.pi - d)


def angle_distance(a: float, b: float) -> float:
    """Angular distance between two undirected edge directions (mod pi)."""
    return _angdist(a, b)


def is_axis_parallel(a: Point, b: Point, tol: float = ANGLE_TOL) -> bool:
    return axis_angle_distance(edge_angle(a, b)) < tol


def count_non_axis_edges(p: ConvexPolygon, tol: float = ANGLE_TOL) -> int:
    return sum(0 if is_axis_parallel(a, b, tol) else 1 for a, b in p.edges())


# ---------------------------------------------------------------------------
# Canonicalizing isometries for marked rectangles
# ---------------------------------------------------------------------------

class RectIsometry:
    """Composition of axis flips plus (optionally) the transpose reflection
    that fixes the bottom-right corner, mapping a marked rectangle to the
    canonical configuration: marked corner bottom-right and width >= height.

    ``forward`` maps source coordinates into the canonical rectangle,
    ``inverse`` maps back; inverse(forward(p)) == p exactly up to float
    round-off of the flips.
    """

    __slots__ = ("src", "dst", "flip_x", "flip_y", "swap")

    def __init__(self, src: Rect, marked: Corner):
        self.src = src
        self.flip_x = marked in (Corner.BOTTOM_LEFT, Corner.TOP_LEFT)
        self.flip_y = marked in (Corner.TOP_LEFT, Corner.TOP_RIGHT)
        self.swap = src.width < src.height
        w, h = src.width, src.height
        if self.swap:
            w, h = h, w
        self.dst = Rect(src.x0, src.y0, src.x0 + w, src.y0 + h)

    def forward(self, p: Point) -> Point:
        u = p.x - self.src.x0
        v = p.y - self.src.y0
        w, h = self.src.width, self.src.height
        if self.flip_x:
            u = w - u
        if self.flip_y:
            v = h - v
        if self.swap:
            u, v = h - v, w - u
        return Point(self.dst.x0 + u, self.dst.y0 + v)

    def inverse(self, p: Point) -> Point:
        u = p.x - self.dst.x0
        v = p.y - self.dst.y0
        w, h = self.src.width, self.src.height
        if self.swap:
            u, v = w - v, h - u
        if self.flip_y:
            v = h - v
        if self.flip_x:
            u = w - u
        return Point(self.src.x0 + u, self.src.y0 + v)

    def _map_rect(self, r: Rect, fn) -> Rect:
        a = fn(Point(r.x0, r.y0))
        b = fn(Point(r.x1, r.y1))
        return Rect(min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y))

    def forward_rect(self, r: Rect) -> Rect:
        return self._map_rect(r, self.forward)

    def inverse_rect(self, r: Rect) -> Rect:
        return self._map_rect(r, self.inverse)

    def inverse_points(self, pts: Sequence[Point]) -> list[Point]:
        return [self.inverse(p) for p in pts]

    def inverse_corner(self, r: Rect, corner: Corner) -> tuple[Rect, Corner]:
        """Map a rectangle and one of its corner names back to source frame."""
        out = self.inverse_rect(r)
        cpt = self.inverse(r.corner_point(corner))
        for c in Corner:
            q = out.corner_point(c)
            if abs(q.x - cpt.x) <= 1e-9 and abs(q.y - cpt.y) <= 1e-9:
                return out, c
        raise AssertionError("corner did not map onto a corner")


def canonicalize(rect: Rect, marked: Corner) -> RectIsometry:
    """Isometry sending ``marked`` to the bottom-right corner with
    width >= height."""
    return RectIsometry(rect, marked)
