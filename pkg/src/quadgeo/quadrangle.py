"""Orthocentric quadrangles: quadration, twinning, the Centre and Central
Circle, Euler-line harmonic ranges, medial/edge circles with altitude and
midfoot data, angle-table derivations, and the acute census."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Circle,
    DegenerateInput,
    GeometryError,
    Line,
    Number,
    Point,
    circumcircle,
    circle_from_diameter,
    cross_ratio,
    is_exact,
    perpendicular_bisector,
    radical_axis,
    sqrt_scalar,
)


class AmbiguousLabeling(GeometryError):
    """Raised when nim-sum labeling is requested for a right or isosceles
    seed, where no scalene labeling rule applies."""


class InvalidAngleSum(GeometryError):
    pass


LABELS = (1, 2, 4, 7)
#: midpoint label = nim-sum of the two vertex labels; barred when 7 is involved
MIDPOINT_PAIRS = {3: (1, 2), 5: (4, 1), 6: (2, 4)}
MIDPOINT_PAIRS_BARRED = {3: (7, 4), 5: (7, 2), 6: (7, 1)}


def orthocentre(p: Point, q: Point, r: Point) -> Point:
    """Intersection of two altitudes."""
    if (q - p).cross(r - p) == 0:
        raise DegenerateInput("collinear points")
    alt_p = Line.from_point_normal(p, r - q)
    alt_q = Line.from_point_normal(q, r - p)
    return alt_p.intersect(alt_q)


@dataclass(frozen=True)
class LabeledQuadrangle:
    vertices: Dict[int, Point]       # labels 1,2,4,7
    twins: Dict[int, Point]          # same keys; twin(l) = reflection through centre
    center: Point                    # label 0: the Centre
    midpoints: Dict[Tuple[int, bool], Point]   # (label, barred)
    diagonals: Dict[Tuple[int, bool], Point]   # (label, barred)
    central_circle: Circle

    def vertex(self, label: int) -> Point:
        return self.vertices[label]

    def twin_vertex(self, label: int) -> Point:
        return self.twins[label]

    def face(self, label: int) -> Tuple[Point, Point, Point]:
        """The triangle on the three labels other than `label`."""
        return tuple(self.vertices[l] for l in LABELS if l != label)

    def face_labels(self, label: int) -> Tuple[int, int, int]:
        return tuple(l for l in LABELS if l != label)

    def edge(self, l1: int, l2: int) -> Line:
        return Line.through(self.vertices[l1], self.vertices[l2])

    def face_circumcircle(self, label: int) -> Circle:
        """Circumcircle of the face opposite `label`; its centre is the
        twin of `label`."""
        return Circle(self.twins[label], self.twins[label].dist2(
            self.vertices[self.face_labels(label)[0]]))

    def twin_quadrangle(self) -> "LabeledQuadrangle":
        neg = {l: self.twins[l] for l in LABELS}
        return LabeledQuadrangle(
            vertices=neg,
            twins={l: self.vertices[l] for l in LABELS},
            center=self.center,
            midpoints={k: self.center.scale(2) - p for k, p in self.midpoints.items()},
            diagonals={k: self.center.scale(2) - p for k, p in self.diagonals.items()},
            central_circle=self.central_circle,
        )


def _is_right_or_isosceles(pts: Sequence[Point], eps: float = 0.0) -> bool:
    a2 = pts[1].dist2(pts[2])
    b2 = pts[2].dist2(pts[0])
    c2 = pts[0].dist2(pts[1])
    sides = [a2, b2, c2]
    for i in range(3):
        rest = sides[:i] + sides[i + 1 :]
        if _near(sides[i], rest[0] + rest[1], eps):  # right angle
            return True
    return (
        _near(a2, b2, eps) or _near(b2, c2, eps) or _near(c2, a2, eps)
    )


def _near(x: Number, y: Number, eps: float) -> bool:
    return x == y if eps == 0.0 else abs(x - y) <= eps * max(abs(float(x)), 1.0)


def quadrate(p1: Point, p2: Point, p3: Point, eps: float = 0.0) -> LabeledQuadrangle:
    """Quadrate a triangle: adjoin its orthocentre, assign nim-sum labels
    {1,2,4,7} (the vertex interior to the other three — the orthocentre of
    the acute face — gets 7), and populate twins, midpoints, diagonal
    points and the Central Circle."""
    h = orthocentre(p1, p2, p3)
    pts = [p1, p2, p3, h]
    if _is_right_or_isosceles([p1, p2, p3], eps):
        raise AmbiguousLabeling("right or isosceles seed cannot be labeled")

    # label 7 = the unique point that is the orthocentre of an acute triangle
    # on the other three (equivalently: the obtuse vertex of every face
    # containing it).
    seven_idx = None
    for i, cand in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if _is_acute(others, eps):
            seven_idx = i
            break
    if seven_idx is None:
        raise AmbiguousLabeling("no acute face found (degenerate seed)")

    rest = [q for j, q in enumerate(pts) if j != seven_idx]
    vertices = {1: rest[0], 2: rest[1], 4: rest[2], 7: pts[seven_idx]}

    quarter = Fraction(1, 4) if all(p.is_exact() for p in pts) else 0.25
    center = Point(
        quarter * sum(p.x for p in pts), quarter * sum(p.y for p in pts)
    )
    twins = {l: center.scale(2) - v for l, v in vertices.items()}

    midpoints: Dict[Tuple[int, bool], Point] = {}
    for lab, (a, b) in MIDPOINT_PAIRS.items():
        midpoints[(lab, False)] = vertices[a].midpoint(vertices[b])
    for lab, (a, b) in MIDPOINT_PAIRS_BARRED.items():
        midpoints[(lab, True)] = vertices[a].midpoint(vertices[b])

    # diagonal points: D6 = 17∩24, D5 = 27∩41, D3 = 47∩12 (+ barred twins)
    diag_defs = {6: ((1, 7), (2, 4)), 5: ((2, 7), (4, 1)), 3: ((4, 7), (1, 2))}
    diagonals: Dict[Tuple[int, bool], Point] = {}
    for lab, ((a, b), (c, d)) in diag_defs.items():
        pt = Line.through(vertices[a], vertices[b]).intersect(
            Line.through(vertices[c], vertices[d])
        )
        diagonals[(lab, False)] = pt
        diagonals[(lab, True)] = center.scale(2) - pt

    r2 = midpoints[(6, False)].dist2(center)
    central = Circle(center, r2)
    return LabeledQuadrangle(vertices, twins, center, midpoints, diagonals, central)


def _is_acute(tri: Sequence[Point], eps: float = 0.0) -> bool:
    a, b, c = tri
    dots = [(b - a).dot(c - a), (a - b).dot(c - b), (a - c).dot(b - c)]
    return all(d > 0 for d in dots)


def twin(q: LabeledQuadrangle) -> LabeledQuadrangle:
    return q.twin_quadrangle()


@dataclass(frozen=True)
class EulerRange:
    orthocentre: Point
    circumcentre: Point
    centroid: Point
    de_longchamps: Point
    line: Line

    def harmonic(self) -> bool:
        return (
            cross_ratio(
                self.orthocentre, self.circumcentre, self.centroid, self.de_longchamps
            )
            == -1
        )


def euler_range(q: LabeledQuadrangle, label: int) -> EulerRange:
    """Euler range of the face opposite `label`: with d the displacement of
    the orthocentre from the Centre, O = −d, G = −d/3, deL = −3d."""
    h = q.vertices[label]
    d = h - q.center
    third = Fraction(1, 3) if d.is_exact() else 1 / 3
    o = q.center - d
    g = q.center - d.scale(third)
    del_ = q.center - d.scale(3)
    return EulerRange(h, o, g, del_, Line.through(h, o))


@dataclass(frozen=True)
class TriangleMetrics:
    """Scalar data of a triangle; exact whenever the side lengths are
    rational (Heronian regime)."""

    a: Number
    b: Number
    c: Number
    s: Number
    area: Number
    r: Number
    r1: Number
    r2: Number
    r3: Number
    R: Number
    sinA: Number
    sinB: Number
    sinC: Number
    cosA: Number
    cosB: Number
    cosC: Number

    @property
    def heronian(self) -> bool:
        return is_exact(self.a) and is_exact(self.b) and is_exact(self.c)


def triangle_metrics(p: Point, q: Point, r: Point) -> TriangleMetrics:
    cross = (q - p).cross(r - p)
    if cross == 0:
        raise DegenerateInput("collinear points")
    area = abs(cross) / 2 if not is_exact(cross) else abs(Fraction(cross)) / 2
    a = sqrt_scalar(q.dist2(r))
    b = sqrt_scalar(r.dist2(p))
    c = sqrt_scalar(p.dist2(q))
    s = (a + b + c) / 2
    R = a * b * c / (4 * area)
    a2, b2, c2 = a * a, b * b, c * c
    return TriangleMetrics(
        a=a, b=b, c=c, s=s, area=area,
        r=area / s, r1=area / (s - a), r2=area / (s - b), r3=area / (s - c),
        R=R,
        sinA=a / (2 * R), sinB=b / (2 * R), sinC=c / (2 * R),
        cosA=(b2 + c2 - a2) / (2 * b * c),
        cosB=(c2 + a2 - b2) / (2 * c * a),
        cosC=(a2 + b2 - c2) / (2 * a * b),
    )


@dataclass(frozen=True)
class MedialData:
    circles: Tuple[Circle, Circle, Circle]          # median-diameter circles
    altitude_products: Tuple[Number, Number, Number]  # per vertex: product of the
    altitude_sums: Tuple[Number, Number, Number]      # two distances & their sum
    radical_axes: Tuple[Line, Line, Line]           # = the altitudes


def medial_circles(p: Point, q: Point, r: Point) -> MedialData:
    """Circles on the medians as diameters. For each vertex the pair
    (product, sum) of its distances to its two altitude points is returned
    as exact symmetric functions: (2R²·cosA·sinB·sinC, 3R·sinB·sinC)."""
    m = triangle_metrics(p, q, r)
    pts = (p, q, r)
    mids = (q.midpoint(r), r.midpoint(p), p.midpoint(q))
    circles = tuple(circle_from_diameter(pts[i], mids[i]) for i in range(3))
    sins = (m.sinA, m.sinB, m.sinC)
    coss = (m.cosA, m.cosB, m.cosC)
    prods, sums = [], []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        prods.append(2 * m.R * m.R * coss[i] * sins[j] * sins[k])
        sums.append(3 * m.R * sins[j] * sins[k])
    axes = tuple(
        radical_axis(circles[(i + 1) % 3], circles[(i + 2) % 3]) for i in range(3)
    )
    return MedialData(circles, tuple(prods), tuple(sums), axes)


def altitudes(p: Point, q: Point, r: Point) -> Tuple[Line, Line, Line]:
    return (
        Line.from_point_normal(p, r - q),
        Line.from_point_normal(q, p - r),
        Line.from_point_normal(r, q - p),
    )


def quadration_tables(A: float, B: float, C: float) -> List[Tuple[float, float, float]]:
    """Angle triples of the three derived quadration triangles
    (π−A, π/2−B, π/2−C) and cyclic; each sums to π."""
    _check_angle_sum(A, B, C)
    h = math.pi / 2
    return [
        (math.pi - A, h - B, h - C),
        (h - A, math.pi - B, h - C),
        (h - A, h - B, math.pi - C),
    ]


def extraversion_tables(A: float, B: float, C: float) -> List[Tuple[float, float, float]]:
    """Extraversion triples (−A, π−B, π−C) and cyclic; each sums to π."""
    _check_angle_sum(A, B, C)
    return [
        (-A, math.pi - B, math.pi - C),
        (math.pi - A, -B, math.pi - C),
        (math.pi - A, math.pi - B, -C),
    ]


def _check_angle_sum(A: float, B: float, C: float, eps: float = 1e-9) -> None:
    if abs(A + B + C - math.pi) > eps:
        raise InvalidAngleSum("angles must sum to pi")


def quadration_edges(m: TriangleMetrics) -> List[Tuple[Number, Number, Number]]:
    """Edge triples 2R·(sinA, cosB, cosC) etc. of the derived triangles."""
    t = 2 * m.R
    return [
        (t * m.sinA, t * m.cosB, t * m.cosC),
        (t * m.cosA, t * m.sinB, t * m.cosC),
        (t * m.cosA, t * m.cosB, t * m.sinC),
    ]


def acute_census(q: LabeledQuadrangle) -> Dict[str, int]:
    acute = sum(1 for l in LABELS if _is_acute(q.face(l)))
    return {"acute": acute, "obtuse": 4 - acute}
