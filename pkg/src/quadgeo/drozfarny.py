"""Droz-Farny lines: construction from a perpendicular pair through the
orthocentre, the converse from a circumcircle point, the envelope conic
with foci at orthocentre and circumcentre, the associated parabola, the
two locus theorems, and the Miquel / reflected-line background theorems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Circle,
    Conic,
    ConicKind,
    DegenerateInput,
    GeometryError,
    Line,
    Number,
    Parabola,
    Point,
    PointNotOnEdgeLine,
    approx_collinear,
    circumcircle,
    collinear,
    foot_of_perpendicular,
    perpendicular_bisector,
    reflect_point_in_line,
)
from .quadrangle import LabeledQuadrangle, orthocentre


class NotPerpendicular(GeometryError):
    pass


class NotThroughVertex(GeometryError):
    pass


class EdgeParallel(GeometryError):
    pass


class PointNotOnCircumcircle(GeometryError):
    pass


class DegenerateChoice(GeometryError):
    pass


class LineNotThroughOrthocentre(GeometryError):
    pass


class DegenerateInstance(GeometryError):
    pass


# ---------------------------------------------------------------------------
# the Droz-Farny line
# ---------------------------------------------------------------------------


def _line_exact(line: Line) -> bool:
    return not any(isinstance(v, float) for v in (line.a, line.b, line.c))


@dataclass(frozen=True)
class DFInstance:
    triangle: Tuple[Point, Point, Point]
    orthocentre: Point
    pair: Tuple[Line, Line]
    cuts: Dict[str, Point]           # X1, X2, Y1, Y2, Z1, Z2
    midpoints: Tuple[Point, Point, Point]
    df: Line
    m: Point                         # reflection of H in df, on circumcircle
    circumcircle: Circle


def _edge_cuts(
    tri: Sequence[Point], pair: Tuple[Line, Line]
) -> Dict[str, Point]:
    a, b, c = tri
    edges = (Line.through(b, c), Line.through(c, a), Line.through(a, b))
    cuts: Dict[str, Point] = {}
    for name, edge in zip("XYZ", edges):
        for idx, line in enumerate(pair, 1):
            if line.is_parallel(edge):
                raise EdgeParallel(f"pair line {idx} parallel to edge {name}")
            cuts[f"{name}{idx}"] = line.intersect(edge)
    return cuts


def df_line(
    tri: Sequence[Point], pair: Tuple[Line, Line], ratio: Number = Fraction(1, 2)
) -> DFInstance:
    """Cut a perpendicular pair of lines through the orthocentre by the
    three edges; the midpoints of the three chords are collinear.  A
    ``ratio`` other than 1/2 gives the semi-affine generalization (no
    collinearity claim)."""
    a, b, c = tri
    h = orthocentre(a, b, c)
    l1, l2 = pair
    tol = 0.0 if h.is_exact() and all(p.is_exact() for p in tri) and _line_exact(l1) and _line_exact(l2) else 1e-9
    if not l1.is_perpendicular(l2, tol):
        raise NotPerpendicular("pair is not perpendicular")
    for line in pair:
        if not line.contains(h, tol):
            raise NotThroughVertex("pair must pass through the orthocentre")
    cuts = _edge_cuts(tri, pair)
    t = ratio
    mids = tuple(
        Point(
            cuts[f"{n}1"].x + t * (cuts[f"{n}2"].x - cuts[f"{n}1"].x),
            cuts[f"{n}1"].y + t * (cuts[f"{n}2"].y - cuts[f"{n}1"].y),
        )
        for n in "XYZ"
    )
    if ratio == Fraction(1, 2) or ratio == 0.5:
        if tol == 0.0:
            assert collinear(*mids), "Droz-Farny midpoints are not collinear"
        else:
            assert approx_collinear(*mids, eps=1e-6), (
                "Droz-Farny midpoints are not collinear"
            )
    df = Line.through(mids[0], mids[1])
    m = reflect_point_in_line(h, df)
    circ = circumcircle(a, b, c)
    return DFInstance(tuple(tri), h, (l1, l2), cuts, mids, df, m, circ)


def verify_instance(inst: DFInstance) -> bool:
    """Both constructions of the line agree, M is on the circumcircle, and
    the midpoint circles through H are coaxal through M."""
    if not inst.circumcircle.contains(inst.m):
        return False
    pb = perpendicular_bisector(inst.orthocentre, inst.m)
    for p in inst.midpoints:
        if not pb.contains(p):
            return False
        if p.dist2(inst.orthocentre) != p.dist2(inst.m):
            return False
    return True


# ---------------------------------------------------------------------------
# the converse: from a circumcircle point back to the pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DFConverse:
    triangle: Tuple[Point, Point, Point]
    orthocentre: Point
    m: Point
    df: Line
    edge_cuts: Tuple[Point, Point, Point]
    # quadratic data (centre, direction, s) per edge: the chord ends are
    # centre ± √s · direction, with s rational
    chord_data: Tuple[Tuple[Point, Point, Number], ...]
    pair: Tuple[Line, Line]          # Approx representatives


def df_converse(tri: Sequence[Point], m: Point) -> DFConverse:
    """The perpendicular bisector of HM is a Droz-Farny line whenever M is
    on the circumcircle; circles centred at its edge cuts through H cut
    the edges in chords whose ends pair into two perpendicular lines
    through H."""
    a, b, c = tri
    h = orthocentre(a, b, c)
    circ = circumcircle(a, b, c)
    if not circ.contains(m):
        raise PointNotOnCircumcircle("M must lie on the circumcircle")
    edges = (Line.through(b, c), Line.through(c, a), Line.through(a, b))
    for e in edges:
        if reflect_point_in_line(h, e).close_to(m, 1e-12):
            raise DegenerateChoice("M is a reflection of H in an edge")
    df = perpendicular_bisector(h, m)
    cut_pts: List[Point] = []
    chords: List[Tuple[Point, Point, Number]] = []
    for e in edges:
        if df.is_parallel(e):
            raise EdgeParallel("Droz-Farny line parallel to an edge")
        p = df.intersect(e)
        cut_pts.append(p)
        d = e.direction()
        # circle centred at p through h meets the edge at p ± √s · d
        s = p.dist2(h) / d.norm2()
        chords.append((p, d, s))
        # the chord ends seen from H are perpendicular:
        # (v + √s d)·(v − √s d) = |v|² − s|d|² = 0 by construction
        v = h - p
        assert v.dot(v) - s * d.norm2() == 0
    pair = _recovered_pair(h, chords)
    return DFConverse(tuple(tri), h, m, df, tuple(cut_pts), tuple(chords), pair)


def _recovered_pair(h: Point, chords) -> Tuple[Line, Line]:
    """Float representatives of the two perpendicular lines through H
    formed by the six chord ends."""
    ends: List[Point] = []
    for p, d, s in chords:
        root = math.sqrt(float(s))
        for sgn in (1.0, -1.0):
            ends.append(
                Point(float(p.x) + sgn * root * float(d.x),
                      float(p.y) + sgn * root * float(d.y))
            )
    hf = Point(float(h.x), float(h.y))
    first = ends[0]
    scale = max(1.0, math.hypot(float(first.x - hf.x), float(first.y - hf.y)))
    l1 = Line.through(hf, first)
    on_l1 = [e for e in ends if abs(float(l1.evaluate(e))) < 1e-7 * scale]
    off = [e for e in ends if abs(float(l1.evaluate(e))) >= 1e-7 * scale]
    if len(on_l1) != 3 or len(off) != 3:
        raise DegenerateInstance("chord ends do not split into two lines")
    l2 = Line.through(hf, off[0])
    for e in off[1:]:
        if abs(float(l2.evaluate(e))) > 1e-6 * scale:
            raise DegenerateInstance("chord ends do not split into two lines")
    if abs(float(l1.a * l2.a + l1.b * l2.b)) > 1e-9:
        raise DegenerateInstance("recovered pair is not perpendicular")
    return (l1, l2)


# ---------------------------------------------------------------------------
# the envelope conic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnvelopeConic:
    conic: Optional[Conic]           # None when degenerate to a point
    kind: str                        # "ellipse" | "hyperbola" | "point"
    center: Point
    axis2: Number                    # (2a)² = R²
    conjugate_axis2: Number          # |R² − OH²| = (2b)²
    asymptotes: Optional[Tuple[Line, Line]]


def df_envelope(tri: Sequence[Point]) -> EnvelopeConic:
    """The envelope of the Droz-Farny lines: the conic with foci at the
    orthocentre and circumcentre and full axis length R — an ellipse or a
    hyperbola according as the triangle is acute or obtuse, degenerating
    to the right-angle vertex for a right triangle."""
    a, b, c = tri
    h = orthocentre(a, b, c)
    circ = circumcircle(a, b, c)
    o = circ.center
    r2 = circ.r2
    oh2 = o.dist2(h)
    center = o.midpoint(h)
    conj = r2 - oh2
    if conj == 0:
        return EnvelopeConic(None, "point", center, r2, 0, None)
    kind = ConicKind.ELLIPSE if conj > 0 else ConicKind.HYPERBOLA
    conic = Conic(h, o, r2, kind)
    asymptotes = None
    if kind is ConicKind.HYPERBOLA:
        # slopes ±(2b)/(2a) about the focal axis, in floats
        ratio = math.sqrt(float(-conj)) / math.sqrt(float(r2))
        ax = Point(float(o.x - h.x), float(o.y - h.y))
        n = math.hypot(float(ax.x), float(ax.y))
        ux, uy = float(ax.x) / n, float(ax.y) / n
        cf = Point(float(center.x), float(center.y))
        dirs = (
            Point(ux - ratio * uy, uy + ratio * ux),
            Point(ux + ratio * uy, uy - ratio * ux),
        )
        asymptotes = tuple(Line.from_point_direction(cf, d) for d in dirs)
    return EnvelopeConic(conic, kind.value, center, r2, abs(conj), asymptotes)


def envelope_tangency(env: EnvelopeConic, inst: DFInstance) -> bool:
    """Exact focal tangency: the reflection of the orthocentre-focus in
    the Droz-Farny line lies at distance R from the circumcentre."""
    if env.conic is None:
        raise DegenerateInstance("degenerate envelope")
    return env.conic.tangency_residual(inst.df) == 0


def envelope_special_tangents(tri: Sequence[Point]) -> bool:
    """The edges and the perpendicular bisectors of HA, HB, HC are all
    tangent to the envelope, and the Central Circle tangents at the
    Euler-line intersections touch it (the vertices of the conic)."""
    a, b, c = tri
    env = df_envelope(tri)
    if env.conic is None:
        raise DegenerateInstance("degenerate envelope")
    h = orthocentre(a, b, c)
    lines = [
        Line.through(b, c), Line.through(c, a), Line.through(a, b),
        perpendicular_bisector(h, a),
        perpendicular_bisector(h, b),
        perpendicular_bisector(h, c),
    ]
    if not all(env.conic.is_tangent(l) for l in lines):
        return False
    # conic vertices: on the focal axis at distance R/2 from the centre —
    # also on the Central Circle, whose tangents there are the last pair
    o = circumcircle(a, b, c).center
    cf = Point(float(env.center.x), float(env.center.y))
    ax = Point(float(o.x) - float(h.x), float(o.y) - float(h.y))
    n = math.hypot(float(ax.x), float(ax.y))
    half_r = math.sqrt(float(env.axis2)) / 2
    for sgn in (1.0, -1.0):
        v = Point(cf.x + sgn * half_r * float(ax.x) / n,
                  cf.y + sgn * half_r * float(ax.y) / n)
        tangent = Line.from_point_direction(v, Point(-float(ax.y), float(ax.x)))
        if abs(float(env.conic.tangency_residual(tangent))) > 1e-6 * float(env.axis2):
            return False
    return True


# ---------------------------------------------------------------------------
# the associated parabola
# ---------------------------------------------------------------------------


def df_parabola(inst: DFInstance) -> Parabola:
    """The inscribed parabola with focus M: its directrix is the line of
    the reflections of M in the three edges, which passes through the
    orthocentre.  It touches the three edges, both pair lines, and the
    Droz-Farny line."""
    a, b, c = inst.triangle
    refs = [
        reflect_point_in_line(inst.m, Line.through(p, q))
        for p, q in ((b, c), (c, a), (a, b))
    ]
    directrix = Line.through(refs[0], refs[1])
    tol = 0.0 if inst.m.is_exact() and refs[2].is_exact() else 1e-9
    assert directrix.contains(refs[2], tol)
    assert directrix.contains(inst.orthocentre, tol)
    if directrix.contains(inst.m, tol):
        raise DegenerateInstance("focus on directrix")
    return Parabola(inst.m, directrix)


def parabola_tangency_audit(inst: DFInstance) -> Dict[str, bool]:
    par = df_parabola(inst)
    a, b, c = inst.triangle
    lines = {
        "edge_a": Line.through(b, c),
        "edge_b": Line.through(c, a),
        "edge_c": Line.through(a, b),
        "pair_1": inst.pair[0],
        "pair_2": inst.pair[1],
        "df": inst.df,
    }
    out = {name: par.is_tangent(l) for name, l in lines.items()}
    out["h_on_directrix"] = par.directrix.contains(inst.orthocentre)
    out["pair_meets_on_directrix"] = par.directrix.contains(
        inst.pair[0].intersect(inst.pair[1])
    )
    out["edge_triangle_circumcircle_through_focus"] = inst.circumcircle.contains(
        inst.m
    )
    return out


# ---------------------------------------------------------------------------
# locus theorems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LocusReport:
    samples: int
    reflections_on_circumcircle: int
    feet_on_central_circle: int
    feet_are_midpoints: int


def locus_checks(
    q: LabeledQuadrangle, h_label: int, directions: Sequence[Point]
) -> LocusReport:
    """Sweep of perpendicular pairs through a vertex of the quadrangle:
    the reflection of the vertex in each Droz-Farny line traces the
    face circumcircle, the foot of the perpendicular traces the Central
    Circle."""
    h = q.vertex(h_label)
    tri = q.face(h_label)
    circ = q.face_circumcircle(h_label)
    refl = feet = mids = 0
    for d in directions:
        pair = (
            Line.from_point_direction(h, d),
            Line.from_point_direction(h, Point(-d.y, d.x)),
        )
        inst = df_line(tri, pair)
        if circ.contains(inst.m):
            refl += 1
        foot = foot_of_perpendicular(h, inst.df)
        if q.central_circle.contains(foot):
            feet += 1
        if foot.close_to(h.midpoint(inst.m), 0.0 if foot.is_exact() else 1e-9):
            mids += 1
    return LocusReport(len(directions), refl, feet, mids)


def equilateral_df_check(side: float = 2.0, count: int = 36) -> bool:
    """For an equilateral triangle every Droz-Farny line is tangent to the
    incircle (foot of the perpendicular from the centre on the incircle)."""
    r = side / (2 * math.sqrt(3.0))
    a = Point(-side / 2, -r)
    b = Point(side / 2, -r)
    c = Point(0.0, 2 * r)
    h = Point(0.0, 0.0)
    for i in range(count):
        th = math.pi * (i + 0.5) / count
        d = Point(math.cos(th), math.sin(th))
        inst = df_line((a, b, c), (
            Line.from_point_direction(h, d),
            Line.from_point_direction(h, Point(-d.y, d.x)),
        ))
        if abs(abs(float(inst.df.evaluate(h))) - r) > 1e-9:
            return False
    return True


# ---------------------------------------------------------------------------
# background theorems: Miquel and reflected-line concurrence
# ---------------------------------------------------------------------------


def miquel_point(tri: Sequence[Point], x: Point, y: Point, z: Point) -> Point:
    """Common point of circles AYZ, BZX, CXY for X, Y, Z on the edge lines
    BC, CA, AB (exact for rational data)."""
    a, b, c = tri
    for p, (e1, e2) in ((x, (b, c)), (y, (c, a)), (z, (a, b))):
        if not collinear(p, e1, e2):
            raise PointNotOnEdgeLine("cut point off its edge line")
    c1 = circumcircle(a, y, z)
    c2 = circumcircle(b, z, x)
    c3 = circumcircle(c, x, y)
    # c1 and c2 share z; the second intersection is the reflection of z in
    # the line of centres
    if c1.center.close_to(c2.center, 0.0 if c1.center.is_exact() else 1e-12):
        raise DegenerateInput("coincident circles")
    p = reflect_point_in_line(z, Line.through(c1.center, c2.center))
    if p.close_to(z, 0.0 if p.is_exact() else 1e-12):
        p = z  # tangent circles: Miquel point is the shared point itself
    assert c3.contains(p, 0.0 if p.is_exact() else 1e-9)
    return p


def theorem_r(tri: Sequence[Point], line: Line) -> Point:
    """Reflections of a line through the orthocentre in the three edges
    concur at a point on the circumcircle, whose Wallace line is parallel
    to the input line."""
    a, b, c = tri
    h = orthocentre(a, b, c)
    if not line.contains(h):
        raise LineNotThroughOrthocentre("line must pass through the orthocentre")
    reflected = [
        _reflect_line_in_line(line, Line.through(p, q))
        for p, q in ((b, c), (c, a), (a, b))
    ]
    p = reflected[0].intersect(reflected[1])
    assert reflected[2].contains(p, 0.0 if p.is_exact() else 1e-9)
    assert circumcircle(a, b, c).contains(p, 0.0 if p.is_exact() else 1e-9)
    return p


def _reflect_line_in_line(line: Line, mirror: Line) -> Line:
    p = foot_of_perpendicular(Point(0, 0), line)
    d = line.direction()
    q = Point(p.x + d.x, p.y + d.y)
    return Line.through(
        reflect_point_in_line(p, mirror), reflect_point_in_line(q, mirror)
    )
