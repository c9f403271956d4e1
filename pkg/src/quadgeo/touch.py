"""Touch circles (incircle + excircles), the 32-circle tangency sweep
against the Central Circle, Gergonne/Nagel/de Longchamps incidences, Soddy
circles with exact classification, number-theoretic triangle generators,
and the bisector-reflection (hexaflex) tangency construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .kernel import (
    Barycentric,
    Circle,
    DegenerateInput,
    GeometryError,
    Line,
    Number,
    Point,
    Tangency,
    ceva_product,
    collinear,
    concurrent,
    foot_of_perpendicular,
    format_scalar,
    is_exact,
    perpendicular_bisector,
    radical_axis,
    reflect_point_in_line,
    sqrt_scalar,
    tangency_classify,
)
from .quadrangle import (
    LABELS,
    LabeledQuadrangle,
    TriangleMetrics,
    triangle_metrics,
    twin,
)


class NotATriangle(GeometryError):
    pass


class DegenerateParameters(GeometryError):
    pass


EXTRAVERSIONS = ("o", "a", "b", "c")


@dataclass(frozen=True)
class TouchCircle:
    label: Tuple[Union[int, str], str]  # (triangle label, extraversion o/a/b/c)
    circle: Circle
    touch_points: Tuple[Point, Point, Point]  # one per edge (a, b, c)


def touch_circles(
    p: Point, q: Point, r: Point, triangle_label: Union[int, str] = ""
) -> List[TouchCircle]:
    """Incircle and the three excircles, with their edge touch points.
    Exact for Heronian triangles (rational side lengths)."""
    m = triangle_metrics(p, q, r)
    a, b, c = m.a, m.b, m.c
    edges = (Line.through(q, r), Line.through(r, p), Line.through(p, q))
    weight_sets = {
        "o": (a, b, c),
        "a": (-a, b, c),
        "b": (a, -b, c),
        "c": (a, b, -c),
    }
    radii = {"o": m.r, "a": m.r1, "b": m.r2, "c": m.r3}
    out = []
    for ext in EXTRAVERSIONS:
        wa, wb, wc = weight_sets[ext]
        tot = wa + wb + wc
        center = Point(
            (wa * p.x + wb * q.x + wc * r.x) / tot,
            (wa * p.y + wb * q.y + wc * r.y) / tot,
        )
        rad = radii[ext]
        circle = Circle(center, rad * rad)
        touches = tuple(foot_of_perpendicular(center, e) for e in edges)
        out.append(TouchCircle((triangle_label, ext), circle, touches))
    return out


@dataclass(frozen=True)
class FeuerbachReport:
    entries: List[Tuple[Tuple[Union[int, str], str], Circle, Tangency, bool]]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def tangent_count(self) -> int:
        return sum(
            1
            for (_, _, kind, _) in self.entries
            if kind in (Tangency.INTERNAL_TANGENT, Tangency.EXTERNAL_TANGENT)
        )

    def lines(self) -> List[str]:
        out = []
        for label, circle, kind, exact in self.entries:
            out.append(
                f"{label[0]}{label[1]}, "
                f"({format_scalar(circle.center.x)},{format_scalar(circle.center.y)}), "
                f"{format_scalar(circle.r2)}, {kind.value}, "
                f"{'exact' if exact else 'approx'}"
            )
        return out


def feuerbach_verify(q: LabeledQuadrangle, eps: float = 0.0) -> FeuerbachReport:
    """Tangency of all 32 touch-circles (4 faces × 2 twins × 4 circles) to
    the Central Circle, via the exact squared identity."""
    entries = []
    for quad, bar in ((q, ""), (twin(q), "~")):
        for label in LABELS:
            face = quad.face(label)
            for tc in touch_circles(*face, triangle_label=f"{label}{bar}"):
                kind = tangency_classify(tc.circle, q.central_circle, eps=eps)
                exact = tc.circle.center.is_exact() and is_exact(tc.circle.r2)
                entries.append((tc.label, tc.circle, kind, exact))
    return FeuerbachReport(entries)


@dataclass(frozen=True)
class GergonneNagelData:
    gergonne: Dict[str, Point]   # per extraversion o/a/b/c
    nagel: Point
    incentre: Point
    centroid: Point
    de_longchamps: Point

    def incidence_checks(self) -> Dict[str, bool]:
        return {
            "nagel=3G-2I": self.nagel
            == Point(
                3 * self.centroid.x - 2 * self.incentre.x,
                3 * self.centroid.y - 2 * self.incentre.y,
            ),
            "nagel-incentre-centroid": collinear(
                self.nagel, self.incentre, self.centroid
            ),
            "incentre-gergonne-deL": collinear(
                self.incentre, self.gergonne["o"], self.de_longchamps
            ),
        }


def _cevian_point(tri: Sequence[Point], cuts: Sequence[Point]) -> Point:
    l1 = Line.through(tri[0], cuts[0])
    l2 = Line.through(tri[1], cuts[1])
    pt = l1.intersect(l2)
    if not Line.through(tri[2], cuts[2]).contains(pt):
        raise DegenerateInput("cevians do not concur")
    return pt


def gergonne_nagel(p: Point, q: Point, r: Point) -> GergonneNagelData:
    """Gergonne points of all four touch circles, the Nagel point, and the
    de Longchamps collinearity data."""
    m = triangle_metrics(p, q, r)
    tcs = touch_circles(p, q, r)
    tri = (p, q, r)
    gergonnes = {}
    for tc in tcs:
        gergonnes[tc.label[1]] = _cevian_point(tri, tc.touch_points)
    wa, wb, wc = m.s - m.a, m.s - m.b, m.s - m.c
    tot = wa + wb + wc
    nagel = Point(
        (wa * p.x + wb * q.x + wc * r.x) / tot,
        (wa * p.y + wb * q.y + wc * r.y) / tot,
    )
    incentre = tcs[0].circle.center
    third = Fraction(1, 3) if p.is_exact() else 1 / 3
    centroid = Point((p.x + q.x + r.x) * third, (p.y + q.y + r.y) * third)
    from .quadrangle import orthocentre

    h = orthocentre(p, q, r)
    # de Longchamps = reflection of H in circumcentre O = 2O - H
    from .kernel import circumcircle

    o = circumcircle(p, q, r).center
    de_l = Point(2 * o.x - h.x, 2 * o.y - h.y)
    return GergonneNagelData(gergonnes, nagel, incentre, centroid, de_l)


def extraverted_gergonne_concurrence(p: Point, q: Point, r: Point) -> bool:
    """The joins of each vertex to the Gergonne point of the opposite-named
    excircle concur at the Nagel point."""
    data = gergonne_nagel(p, q, r)
    tri = (p, q, r)
    for vertex, ext in zip(tri, ("a", "b", "c")):
        if not collinear(vertex, data.gergonne[ext], data.nagel):
            return False
    return True


class SoddyClass:
    EXTERNAL = "External"
    INTERNAL = "Internal"
    CRITICAL = "Critical"


@dataclass(frozen=True)
class SoddyClassification:
    kind: str
    isoperimetric_point_exists: bool
    equal_detour_points: int


def classify_soddy(a: Number, b: Number, c: Number) -> SoddyClassification:
    """Sign of 2s − (4R + r), computed exactly without square roots:
    with Q = ab+bc+ca−s², 4R+r = sQ/Δ, so 2s ⋛ 4R+r ⟺ 2Δ ⋛ Q."""
    if a + b <= c or b + c <= a or c + a <= b or min(a, b, c) <= 0:
        raise NotATriangle("triangle inequality violated")
    s = (a + b + c) / 2 if not is_exact(a) else Fraction(a + b + c) / 2
    q_val = a * b + b * c + c * a - s * s
    area2 = s * (s - a) * (s - b) * (s - c)  # Δ²
    if q_val <= 0:
        kind = SoddyClass.INTERNAL
    else:
        lhs, rhs = 4 * area2, q_val * q_val  # (2Δ)² vs Q²
        kind = (
            SoddyClass.INTERNAL
            if lhs > rhs
            else SoddyClass.CRITICAL
            if lhs == rhs
            else SoddyClass.EXTERNAL
        )
    if kind == SoddyClass.INTERNAL:
        return SoddyClassification(kind, True, 1)
    if kind == SoddyClass.EXTERNAL:
        return SoddyClassification(kind, False, 2)
    return SoddyClassification(kind, False, 1)


@dataclass(frozen=True)
class SoddyData:
    tangent_circles: Tuple[Circle, Circle, Circle]
    inner: Circle
    outer: Optional[Circle]         # None in the critical case
    outer_line: Optional[Line]      # the degenerate outer circle
    outer_curvature: Number
    inner_radius: Number
    soddy_line: Line
    gergonne_line: Line
    gergonne_point: Point
    incentre: Point
    de_longchamps: Point
    classification: SoddyClassification


def _tangent_circle_center(
    tri: Sequence[Point], radii: Sequence[Number], rho: Number, signs: Sequence[int]
) -> Point:
    """Centre P with |P−Vᵢ|² = (rho + signs[i]·radii[i])² for all i, solved
    from the two pairwise-difference linear equations (rational)."""
    targets = [(rho + signs[i] * radii[i]) ** 2 for i in range(3)]
    lines = []
    for i, j in ((0, 1), (0, 2)):
        vi, vj = tri[i], tri[j]
        # |P-vi|² - |P-vj|² = targets[i]-targets[j]
        # → 2(vj-vi)·P = targets[i]-targets[j] + |vj|²-|vi|²
        d = vj - vi
        rhs = (targets[i] - targets[j] + vj.norm2() - vi.norm2()) / 2
        lines.append(Line(d.x, d.y, rhs))
    return lines[0].intersect(lines[1])


def soddy(p: Point, q: Point, r: Point) -> SoddyData:
    """Soddy circles of the triangle: the three mutually tangent circles
    centred at the vertices (radii s−a, s−b, s−c), the inner and outer
    tangent circles via Descartes (the radical √(Σkᵢkⱼ) equals 1/r exactly,
    so everything is rational for Heronian triangles), and the Soddy /
    Gergonne line pair."""
    m = triangle_metrics(p, q, r)
    tri = (p, q, r)
    radii = (m.s - m.a, m.s - m.b, m.s - m.c)
    tangent = tuple(Circle(tri[i], radii[i] ** 2) for i in range(3))
    k1, k2, k3 = (1 / radii[i] for i in range(3))
    root = 1 / m.r  # = sqrt(k1k2+k2k3+k3k1), exact
    inner_curv = k1 + k2 + k3 + 2 * root
    outer_curv = k1 + k2 + k3 - 2 * root
    rho_in = 1 / inner_curv
    inner_center = _tangent_circle_center(tri, radii, rho_in, (1, 1, 1))
    inner = Circle(inner_center, rho_in * rho_in)

    gn = gergonne_nagel(p, q, r)
    soddy_line = Line.through(gn.incentre, gn.gergonne["o"])
    incircle = Circle(gn.incentre, m.r * m.r)
    gergonne_line = radical_axis(incircle, inner)

    outer = None
    outer_line = None
    if outer_curv != 0:
        rho_out = 1 / outer_curv  # may be negative: enclosing circle
        abs_rho = -rho_out if rho_out < 0 else rho_out
        # enclosing: |P-Vi| = |rho| - radii[i]; external: |P-Vi| = rho + radii[i]
        signs = (-1, -1, -1) if rho_out < 0 else (1, 1, 1)
        outer_center = _tangent_circle_center(tri, radii, abs_rho, signs)
        outer = Circle(outer_center, abs_rho * abs_rho)
    else:
        outer_line = gergonne_line

    return SoddyData(
        tangent_circles=tangent,
        inner=inner,
        outer=outer,
        outer_line=outer_line,
        outer_curvature=outer_curv,
        inner_radius=rho_in,
        soddy_line=soddy_line,
        gergonne_line=gergonne_line,
        gergonne_point=gn.gergonne["o"],
        incentre=gn.incentre,
        de_longchamps=gn.de_longchamps,
        classification=classify_soddy(m.a, m.b, m.c),
    )


def bremner_critical(u: Number, v: Number) -> Tuple[Number, Number, Number]:
    """One-parameter-pair family of critical triangles (2s = 4R + r)."""
    if u == 5 * v or u == -5 * v or u == 0 or v == 0:
        raise DegenerateParameters("degenerate family parameters")
    a = 8 * u * u * (u * u + 25 * v * v)
    b = 5 * (u + 5 * v) ** 2 * (u * u - 2 * u * v + 5 * v * v)
    c = 5 * (u - 5 * v) ** 2 * (u * u + 2 * u * v + 5 * v * v)
    if min(a, b, c) <= 0 or a + b <= c or b + c <= a or c + a <= b:
        raise DegenerateParameters("parameters give no triangle")
    return (a, b, c)


def cos_family(p: Number, q: Number) -> Tuple[Number, Number, Number]:
    """Triangles with cosA = −7/25 exactly: (24(p²+q²), −7p²+48pq+7q²,
    25(p²−q²)) for 7q > p > q > 0."""
    if not (7 * q > p > q > 0):
        raise DegenerateParameters("need 7q > p > q > 0")
    return (
        24 * (p * p + q * q),
        -7 * p * p + 48 * p * q + 7 * q * q,
        25 * (p * p - q * q),
    )


@dataclass(frozen=True)
class HexaflexData:
    tangent_lines: Dict[str, Line]        # tA,tB,tC (internal) / tA',... (external)
    contact_points: Dict[str, Tuple[Point, Point, Point]]  # per touch circle o/a/b/c
    perspectors: Dict[str, Point]          # per touch circle


def hexaflex(p: Point, q: Point, r: Point) -> HexaflexData:
    """Reflect each edge in the two angle bisectors of the opposite vertex.
    The reflected edges are tangent to the touch circles; the three contact
    points on each touch circle form a triangle homothetic to the medial
    triangle, and each perspector with the medial triangle lies on the
    Central Circle."""
    tri = (p, q, r)
    tcs = {tc.label[1]: tc for tc in touch_circles(p, q, r)}
    incentre = tcs["o"].circle.center
    edges = (
        Line.through(q, r),
        Line.through(r, p),
        Line.through(p, q),
    )
    internal: Dict[int, Line] = {}
    external: Dict[int, Line] = {}
    t_int: Dict[int, Line] = {}
    t_ext: Dict[int, Line] = {}
    for i, v in enumerate(tri):
        bis = Line.through(v, incentre)
        ext = bis.perpendicular_through(v)
        internal[i], external[i] = bis, ext
        t_int[i] = _reflect_line(edges[i], bis)
        t_ext[i] = _reflect_line(edges[i], ext)

    tangent_lines = {
        "tA": t_int[0], "tB": t_int[1], "tC": t_int[2],
        "tA'": t_ext[0], "tB'": t_ext[1], "tC'": t_ext[2],
    }

    # which three tangents touch each touch circle:
    #  incircle: tA,tB,tC; X-excircle: tX plus the other two externals
    tangent_sets = {
        "o": (t_int[0], t_int[1], t_int[2]),
        "a": (t_int[0], t_ext[1], t_ext[2]),
        "b": (t_ext[0], t_int[1], t_ext[2]),
        "c": (t_ext[0], t_ext[1], t_int[2]),
    }
    mids = (q.midpoint(r), r.midpoint(p), p.midpoint(q))
    contact_points = {}
    perspectors = {}
    for ext_label, lines in tangent_sets.items():
        center = tcs[ext_label].circle.center
        contacts = tuple(foot_of_perpendicular(center, ln) for ln in lines)
        contact_points[ext_label] = contacts
        perspectors[ext_label] = _perspector(contacts, mids)
    return HexaflexData(tangent_lines, contact_points, perspectors)


def _reflect_line(line: Line, mirror: Line) -> Line:
    # reflect two points of the line
    p0 = _point_on_line(line)
    p1 = p0 + line.direction()
    return Line.through(
        reflect_point_in_line(p0, mirror), reflect_point_in_line(p1, mirror)
    )


def _point_on_line(line: Line) -> Point:
    if line.b != 0:
        return Point(0 * line.a, line.c / line.b)
    return Point(line.c / line.a, 0 * line.a)


def _perspector(contacts: Sequence[Point], mids: Sequence[Point]) -> Point:
    """Concurrence point of the joins contact↔midpoint under the pairing
    that makes the three joins concur."""
    for perm in permutations(range(3)):
        try:
            lines = [
                Line.through(contacts[i], mids[perm[i]])
                for i in range(3)
                if contacts[i] != mids[perm[i]]
            ]
            if len(lines) < 3:
                continue
            pt = concurrent(lines)
        except Exception:
            continue
        if pt is not None:
            return pt
    raise DegenerateInput("no concurrent contact/midpoint pairing found")
