"""Simson-Wallace and Steiner lines, their quadration, the iterated
reflect-in-three-edges sequence with its naming scheme and cycle detection,
the three-cusped envelope (deltoid) with its double-contact test, the
six-tangent star configuration, and the converse constructions."""

from __future__ import annotations

import math
import string
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Circle,
    DegenerateInput,
    GeometryError,
    Line,
    Number,
    Point,
    circle_from_diameter,
    circumcircle,
    collinear,
    foot_of_perpendicular,
    is_exact,
    reflect_point_in_line,
    sqrt_scalar,
)
from .quadrangle import LABELS, LabeledQuadrangle, orthocentre


class PointNotOnCircumcircle(GeometryError):
    pass


class ZeroParameter(GeometryError):
    pass


class NoIntersection(GeometryError):
    pass


# ---------------------------------------------------------------------------
# Wallace / Steiner lines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WallaceData:
    source: Point
    feet: Tuple[Point, Point, Point]
    line: Line
    steiner_line: Line
    midpoint_T: Point
    orthocentre: Point
    degenerate: bool  # source at a vertex


def wallace_line(tri: Sequence[Point], s: Point, eps: float = 0.0) -> WallaceData:
    """Feet of the perpendiculars from a circumcircle point are collinear;
    the Steiner line is the 2x homothety of that line from the source and
    passes through the orthocentre; the source-orthocentre midpoint lies on
    the Central Circle."""
    p, q, r = tri
    circ = circumcircle(p, q, r)
    if not circ.contains(s, eps=eps):
        raise PointNotOnCircumcircle("source must lie on the circumcircle")
    h = orthocentre(p, q, r)
    edges = (Line.through(q, r), Line.through(r, p), Line.through(p, q))
    feet = tuple(foot_of_perpendicular(s, e) for e in edges)
    degenerate = s in (p, q, r)
    distinct = [f for f in feet if f != s]
    base = [f for f in feet if True]
    # line through two distinct feet
    pts = []
    for f in feet:
        if all(f != g for g in pts):
            pts.append(f)
    if len(pts) < 2:
        raise DegenerateInput("all feet coincide")
    line = Line.through(pts[0], pts[1])
    steiner = _homothety_line(line, s, 2)
    return WallaceData(s, feet, line, steiner, s.midpoint(h), h, degenerate)


def _homothety_line(line: Line, center: Point, k: Number) -> Line:
    p0 = foot_of_perpendicular(center, line)
    image = Point(center.x + k * (p0.x - center.x), center.y + k * (p0.y - center.y))
    return line.parallel_through(image)


@dataclass(frozen=True)
class QuadratedWallace:
    sources: Dict[int, Point]      # per face label
    feet: List[Point]              # all 12 feet
    line: Line                     # the single common Wallace line


def wallace_quadrated(q: LabeledQuadrangle, s8: Point) -> QuadratedWallace:
    """Transport of a circumcircle point to the other three circumcircles
    by a common radius vector: the twelve perpendicular feet lie on one
    line."""
    circ8 = q.face_circumcircle(7)
    if not circ8.contains(s8):
        raise PointNotOnCircumcircle("source must lie on the 124-circumcircle")
    rho = s8 - circ8.center  # radius vector; face circumcentre of l is twin(l)
    sources = {7: s8}
    for l in (1, 2, 4):
        sources[l] = q.twins[l] + rho
    feet: List[Point] = []
    for l, s in sources.items():
        face_labels = q.face_labels(l)
        for i in range(3):
            l1, l2 = [x for k, x in enumerate(face_labels) if k != i]
            feet.append(foot_of_perpendicular(s, q.edge(l1, l2)))
    line = wallace_line([q.vertices[x] for x in q.face_labels(7)], s8).line
    return QuadratedWallace(sources, feet, line)


def rational_circle_point(circle: Circle, base: Point, t: Number) -> Point:
    """Rational parametrization of the circle through a known rational
    point `base`: second intersection of the line of slope t through base."""
    # direction (1, t); solve |base + u·d - c|² = r², one root u=0
    d = Point(1 + 0 * t, t)
    b = base - circle.center
    u = -2 * b.dot(d) / d.norm2()
    return Point(base.x + u * d.x, base.y + u * d.y)


# ---------------------------------------------------------------------------
# the iterated reflection sequence
# ---------------------------------------------------------------------------

_CYCLIC = (1, 2, 4, 7)


def _host_order(host: int) -> Tuple[int, int, int]:
    i = _CYCLIC.index(host)
    return tuple(_CYCLIC[(i + k) % 4] for k in (1, 2, 3))


@dataclass(frozen=True)
class TrisequenceNode:
    name: str
    point: Point
    host: int             # circle label the point lies on
    line_name: str        # the line it lies on (generation letter)
    parent: Optional[str]


@dataclass(frozen=True)
class TrisequenceRow:
    reflect: str                 # node name
    in_edges: Tuple[str, str, str]
    to_give: Tuple[str, str, str]
    lying_on: Tuple[int, int, int]
    through: int                 # vertex label the new line passes through
    line_name: str
    line: Line
    slope: Optional[Number]


@dataclass
class TrisequenceResult:
    nodes: Dict[str, TrisequenceNode]
    rows: List[TrisequenceRow]
    lines: Dict[str, Line]
    coincidences: List[Tuple[str, str]]   # (would-be name, existing name)


def trisequence(
    q: LabeledQuadrangle, seed_name: str, seed_point: Point, max_lines: int
) -> TrisequenceResult:
    """Breadth-first expansion: reflect each point in the three edges of
    its host face; the images land on the other three circumcircles and are
    collinear on a line through the host vertex. Lines are lettered in
    processing order; already-seen image points close cycles."""
    host = int(seed_name[0])
    if not q.face_circumcircle(host).contains(seed_point):
        raise PointNotOnCircumcircle("seed must lie on its host circumcircle")
    letters = _line_letters()
    seed = TrisequenceNode(seed_name, seed_point, host, seed_name[1:], None)
    nodes = {seed_name: seed}
    by_point: Dict[Point, str] = {seed_point: seed_name}
    rows: List[TrisequenceRow] = []
    lines: Dict[str, Line] = {}
    coincidences: List[Tuple[str, str]] = []
    queue: List[str] = [seed_name]
    while queue and len(lines) < max_lines:
        name = queue.pop(0)
        node = nodes[name]
        letter = letters[len(lines)]
        opp = _host_order(node.host)
        images: List[Point] = []
        give_names: List[str] = []
        edge_names: List[str] = []
        for i, v in enumerate(opp):
            e1, e2 = opp[(i + 1) % 3], opp[(i + 2) % 3]
            edge_names.append(f"{e1}{e2}")
            img = reflect_point_in_line(node.point, q.edge(e1, e2))
            images.append(img)
            if img in by_point:
                existing = by_point[img]
                give_names.append(existing)
                if existing != f"{v}{letter}":
                    coincidences.append((f"{v}{letter}", existing))
            else:
                child = TrisequenceNode(f"{v}{letter}", img, v, letter, name)
                nodes[child.name] = child
                by_point[img] = child.name
                give_names.append(child.name)
                queue.append(child.name)
        line = Line.through(images[0], images[1])
        assert line.contains(images[2]), "images not collinear"
        assert line.contains(q.vertices[node.host]), "line misses host vertex"
        lines[letter] = line
        rows.append(
            TrisequenceRow(
                reflect=name,
                in_edges=tuple(edge_names),
                to_give=tuple(give_names),
                lying_on=opp,
                through=node.host,
                line_name=letter,
                line=line,
                slope=line.slope(),
            )
        )
    return TrisequenceResult(nodes, rows, lines, coincidences)


def _line_letters() -> List[str]:
    single = list(string.ascii_uppercase)
    return single + [a + b for a in single for b in single]


def midpoint_rs(q: LabeledQuadrangle, node: TrisequenceNode) -> Tuple[Point, Tuple[int, int]]:
    """Midpoint of a sequence point with its host vertex (the orthocentre
    of the host face) lies on the Central Circle; return it with its
    half-angle parametrization (r, s): T/radius = ((r²−s²), 2rs)/(r²+s²)."""
    t = node.point.midpoint(q.vertices[node.host])
    assert q.central_circle.contains(t)
    rad2 = q.central_circle.r2
    rad = sqrt_scalar(rad2)
    if not is_exact(rad):
        raise DegenerateInput("irrational central radius")
    p = Fraction(t.x - q.central_circle.center.x, 1) / rad
    s_ = Fraction(t.y - q.central_circle.center.y, 1) / rad
    if p == -1:
        return t, (0, 1)
    ratio = s_ / (1 + p)  # = s/r
    return t, (ratio.denominator, ratio.numerator)


# ---------------------------------------------------------------------------
# three-cycles and the trebled quadrangle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreeCycleData:
    antipodes: Dict[Tuple[int, int], Point]   # (vertex, circle) -> antipode
    cycles: List[Tuple[Tuple[int, int], ...]]
    lines: Dict[Tuple[int, int], Line]        # label pair -> 4-point line
    quads: Dict[Tuple[int, int], Tuple[Point, ...]]  # the 4 points per line
    trebled: Dict[int, Point]                 # trebled quadrangle vertices
    trebled_circle: Circle


def three_cycles(q: LabeledQuadrangle) -> ThreeCycleData:
    """The twelve vertex antipodes on the circumcircles reflect among
    themselves in four 3-cycles.  For each pair of labels the line joining
    the two cross antipodes carries four points of the configuration; the
    six such lines concur in threes at the vertices of the quadrangle
    trebled about the Centre, whose Central Circle has thrice the radius."""
    antipodes: Dict[Tuple[int, int], Point] = {}
    for h in LABELS:
        center = q.twins[h]
        for v in q.face_labels(h):
            antipodes[(v, h)] = Point(
                2 * center.x - q.vertices[v].x, 2 * center.y - q.vertices[v].y
            )
    # reflection images of each antipode in its host-face edges
    image_map: Dict[Tuple[int, int], List[Point]] = {}
    for (v, h), pt in antipodes.items():
        opp = _host_order(h)
        imgs = []
        for i, w in enumerate(opp):
            e1, e2 = opp[(i + 1) % 3], opp[(i + 2) % 3]
            imgs.append(reflect_point_in_line(pt, q.edge(e1, e2)))
        image_map[(v, h)] = imgs

    point_keys = {pt: key for key, pt in antipodes.items()}
    succ: Dict[Tuple[int, int], List[Tuple[int, int]]] = {
        key: [point_keys[img] for img in imgs if img in point_keys]
        for key, imgs in image_map.items()
    }
    cycles: List[Tuple[Tuple[int, int], ...]] = []
    seen = set()
    for start in antipodes:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in succ[cur]:
                if nxt not in comp:
                    comp.add(nxt)
                    frontier.append(nxt)
        if all(k not in seen for k in comp):
            seen |= comp
            cycles.append(tuple(sorted(comp)))

    # six 4-point lines: one per unordered label pair, joining the two
    # cross antipodes together with two coincident reflection images
    lines: Dict[Tuple[int, int], Line] = {}
    quads: Dict[Tuple[int, int], Tuple[Point, ...]] = {}
    for i, c1 in enumerate(LABELS):
        for c2 in LABELS[i + 1:]:
            a1, a2 = antipodes[(c1, c2)], antipodes[(c2, c1)]
            line = Line.through(a1, a2)
            extras = {
                img
                for imgs in image_map.values()
                for img in imgs
                if line.contains(img) and img not in (a1, a2)
            }
            lines[(c1, c2)] = line
            quads[(c1, c2)] = (a1, a2) + tuple(sorted(extras, key=lambda p: (p.x, p.y)))

    trebled = {
        l: Point(
            q.center.x - 3 * (v.x - q.center.x), q.center.y - 3 * (v.y - q.center.y)
        )
        for l, v in q.vertices.items()
    }
    trebled_circle = Circle(q.center, 9 * q.central_circle.r2)
    return ThreeCycleData(antipodes, cycles, lines, quads, trebled, trebled_circle)


def six_cycle_check(q: LabeledQuadrangle, start: Point) -> bool:
    """Reflecting in edges 14, 24, 47, 14, 24, 47 returns the point."""
    p = start
    for _ in range(2):
        for (a, b) in ((1, 4), (2, 4), (4, 7)):
            p = reflect_point_in_line(p, q.edge(a, b))
    return p == start


# ---------------------------------------------------------------------------
# deltoid (normalized frame: centre at origin, circumradius parameter R=2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DeltoidPoint:
    t: Number
    point: Point
    tangent: Line


def deltoid(t: Number) -> DeltoidPoint:
    if t == 0:
        raise ZeroParameter("t = 0 is the vertical-tangent limit")
    one = Fraction(1) if is_exact(t) else 1.0
    d = one + t * t
    pt = Point(8 * t**3 / (d * d), (3 * one - 6 * t * t - t**4) / (d * d))
    # tangent: y = -x/t + (3 - t²)/(1 + t²)
    tangent = Line(one / t, one, (3 * one - t * t) / d)
    return DeltoidPoint(t, pt, tangent)


def _deltoid_line_poly(t: Number) -> List[Number]:
    """Coefficients (ascending) of the quartic N(u) whose roots are the
    deltoid parameters where the parameter-t tangent line meets the curve:
    N(u) = (1+t²)·[8u³ + t(3−6u²−u⁴)] − t(3−t²)(1+u²)²."""
    one = Fraction(1) if is_exact(t) else 1.0
    d = one + t * t
    k = t * (3 * one - t * t)
    # (1+t²)(−t·u⁴ + 8u³ − 6t·u² + 0·u + 3t) − k(u⁴ + 2u² + 1)
    return [
        d * 3 * t - k,
        0 * one,
        d * (-6 * t) - 2 * k,
        d * 8,
        d * (-t) - k,
    ]


def deltoid_tangency_check(t: Number) -> bool:
    """The tangent line has exact double contact at parameter t: the
    intersection quartic has a double root there."""
    if t == 0:
        raise ZeroParameter("t = 0 is the vertical-tangent limit")
    coeffs = _deltoid_line_poly(t)
    val = sum(c * t**i for i, c in enumerate(coeffs))
    deriv = sum(i * c * t ** (i - 1) for i, c in enumerate(coeffs) if i >= 1)
    return val == 0 and deriv == 0


# ---------------------------------------------------------------------------
# six tangent lines to the Central Circle (star configuration)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarOfDavid:
    tangent_lines: List[Line]
    triangles: Tuple[Tuple[Point, Point, Point], Tuple[Point, Point, Point]]
    thetas: List[float]


def star_of_david(q: LabeledQuadrangle, eps: float = 1e-9) -> StarOfDavid:
    """Six tangents to the Central Circle: the Wallace line touches it at
    three symmetric positions, and the twin triangle contributes the three
    parallel tangents on the opposite side (central reflections).  The two
    triples bound two equilateral triangles, mutual reflections through the
    Centre (approximate backend)."""
    tri = [
        Point(float(p.x), float(p.y)) for p in (q.face(7))
    ]
    circ = circumcircle(*tri)
    cx, cy = float(circ.center.x), float(circ.center.y)
    rad = math.sqrt(float(circ.r2))
    c0x, c0y = float(q.center.x), float(q.center.y)
    target = math.sqrt(float(q.central_circle.r2))

    def wl(theta: float) -> Line:
        s = Point(cx + rad * math.cos(theta), cy + rad * math.sin(theta))
        return wallace_line(tri, s, eps=1e-6 * rad * rad).line

    def dist(theta: float) -> float:
        line = wl(theta)
        return abs(line.evaluate(Point(c0x, c0y))) / math.hypot(
            float(line.a), float(line.b)
        )

    # locate the six maxima of dist (they attain the Central radius)
    n = 2000
    samples = [dist(2 * math.pi * i / n) for i in range(n)]
    thetas = []
    for i in range(n):
        prev, cur, nxt = samples[i - 1], samples[i], samples[(i + 1) % n]
        if cur >= prev and cur > nxt and cur > 0.95 * target:
            lo = 2 * math.pi * (i - 1) / n
            hi = 2 * math.pi * (i + 1) / n
            for _ in range(80):  # ternary search for the maximum
                m1 = lo + (hi - lo) / 3
                m2 = hi - (hi - lo) / 3
                if dist(m1) < dist(m2):
                    lo = m1
                else:
                    hi = m2
            thetas.append((lo + hi) / 2)
    primary = [wl(th) for th in thetas]
    if len(primary) != 3:
        raise DegenerateInput(f"expected 3 tangent positions, found {len(primary)}")
    mirrored = [_homothety_line(l, Point(c0x, c0y), -1) for l in primary]
    lines = primary + mirrored

    def corners(ls):
        return tuple(ls[i].intersect(ls[(i + 1) % 3]) for i in range(3))

    return StarOfDavid(lines, (corners(primary), corners(mirrored)), thetas)


def is_equilateral(tri: Sequence[Point], eps: float) -> bool:
    d = [
        math.sqrt(float(tri[i].dist2(tri[(i + 1) % 3]))) for i in range(3)
    ]
    scale = max(d)
    return max(d) - min(d) <= eps * scale


# ---------------------------------------------------------------------------
# converse constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConverseSimsonData:
    triangle: Tuple[Point, Point, Point]
    circumcircle: Circle
    parabola_directrix: Line
    orthocentre: Point


def converse_simson(p: Point, l: Point, m: Point, n: Point) -> ConverseSimsonData:
    """Perpendiculars at three collinear points to their joins to P form a
    triangle whose circumcircle passes through P; P is the focus of the
    parabola with tangent-at-vertex LMN, and the triangle's orthocentre
    lies on the directrix."""
    if len({l, m, n}) < 3:
        raise DegenerateInput("collinear points must be distinct")
    if not collinear(l, m, n):
        raise DegenerateInput("L, M, N must be collinear")
    base = Line.through(l, m)
    if base.contains(p):
        raise DegenerateInput("P must lie off the line LMN")
    perps = [Line.from_point_normal(x, x - p) for x in (l, m, n)]
    tri = (
        perps[1].intersect(perps[2]),
        perps[2].intersect(perps[0]),
        perps[0].intersect(perps[1]),
    )
    circ = circumcircle(*tri)
    assert circ.contains(p), "constructed circumcircle misses P"
    foot = foot_of_perpendicular(p, base)
    directrix = base.parallel_through(Point(2 * foot.x - p.x, 2 * foot.y - p.y))
    h = orthocentre(*tri)
    assert directrix.contains(h), "orthocentre not on the directrix"
    return ConverseSimsonData(tri, circ, directrix, h)


def line_circle_intersections(line: Line, circle: Circle) -> List[Point]:
    """Both intersection points (exact when the discriminant is a perfect
    square); raises NoIntersection when the line misses the circle."""
    f = foot_of_perpendicular(circle.center, line)
    h2 = circle.r2 - f.dist2(circle.center)
    if h2 < 0:
        raise NoIntersection("line misses the circle")
    d = line.direction()
    try:
        u = sqrt_scalar(h2 / d.norm2())
    except ValueError as exc:
        raise NoIntersection(str(exc)) from exc
    return [
        Point(f.x + u * d.x, f.y + u * d.y),
        Point(f.x - u * d.x, f.y - u * d.y),
    ]


def second_intersection(circle: Circle, known: Point, direction: Point) -> Point:
    """Other intersection of the line through a known circle point."""
    b = known - circle.center
    u = -2 * b.dot(direction) / direction.norm2()
    return Point(known.x + u * direction.x, known.y + u * direction.y)


@dataclass(frozen=True)
class FitTriangleData:
    triangle: Tuple[Point, Point, Point]
    wallace: WallaceData


def fit_triangle(circle: Circle, p: Point, line: Line, a: Point) -> FitTriangleData:
    """Inscribe a triangle with vertex A in the circle so that the given
    line is the Wallace line of P: the circle on PA as diameter meets the
    line in the two feet on the sides through A."""
    if not circle.contains(p) or not circle.contains(a):
        raise PointNotOnCircumcircle("P and A must lie on the circle")
    diam = circle_from_diameter(p, a)
    feet = line_circle_intersections(line, diam)
    f_c, f_b = feet
    b = second_intersection(circle, a, f_c - a)
    c = second_intersection(circle, a, f_b - a)
    wd = wallace_line((a, b, c), p, eps=1e-9 * float(circle.r2))
    if wd.line != line and not (
        wd.line.contains(f_b, eps=1e-9) and wd.line.contains(f_c, eps=1e-9)
    ):
        raise DegenerateInput("constructed triangle has a different Wallace line")
    return FitTriangleData((a, b, c), wd)
