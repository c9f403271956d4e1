"""Lighthouse theorem, Morley configuration, rational Morley families,
Thrice Sixteen, and the inside-out trebler construction.

Angle trisection is not rational, so everything driven by actual beam
angles runs on the float backend with an explicit tolerance; statements
about rational edge *lengths* (the Pythagorean and two-parameter families,
the 1001-jigsaw) are checked exactly, working in Q(√3) where sines of the
relevant angles are √3 times a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Circle,
    DegenerateInput,
    GeometryError,
    Line,
    Number,
    Point,
    circumcircle,
    collinear,
    foot_of_perpendicular,
    reflect_point_in_line,
)
from .quadrangle import orthocentre

DEFAULT_EPS = 1e-9


class InvalidParameters(GeometryError):
    pass


class ParallelBeams(GeometryError):
    pass


# ---------------------------------------------------------------------------
# float helpers
# ---------------------------------------------------------------------------


def _fp(p: Point) -> Point:
    return Point(float(p.x), float(p.y))


def _angle_of(d: Point) -> float:
    return math.atan2(float(d.y), float(d.x))


def _dir(theta: float) -> Point:
    return Point(math.cos(theta), math.sin(theta))


def _signed_angle(u: Point, v: Point) -> float:
    """Signed angle turning u onto v, in (-pi, pi]."""
    return math.atan2(
        float(u.x) * float(v.y) - float(u.y) * float(v.x),
        float(u.x) * float(v.x) + float(u.y) * float(v.y),
    )


def _scale(points: Sequence[Point]) -> float:
    return max(
        1.0, max(abs(float(p.x)) for p in points), max(abs(float(p.y)) for p in points)
    )


# ---------------------------------------------------------------------------
# the Lighthouse theorem for general n
# ---------------------------------------------------------------------------


@dataclass
class LighthouseConfig:
    b: Point
    c: Point
    beta: float
    gamma: float
    n: int
    points: List[List[Optional[Point]]]   # [j][k] beam j from B ∩ beam k from C
    ngons: List[List[Point]]              # grouped by (j + k) mod n
    circles: List[Optional[Circle]]
    beams_b: List[Line]
    beams_c: List[Line]
    parallel_flag: bool                   # some beam pair met at infinity


def _beam_lines(
    b: Point, c: Point, beta: float, gamma: float, n: int
) -> Tuple[List[Line], List[Line]]:
    """Beams numbered 0..n-1 cyclically towards the baseline, the two
    lighthouses turning in opposite senses."""
    theta_b = _angle_of(c - b)
    theta_c = _angle_of(b - c)
    beams_b = [
        Line.from_point_direction(b, _dir(theta_b + beta - j * math.pi / n))
        for j in range(n)
    ]
    beams_c = [
        Line.from_point_direction(c, _dir(theta_c - gamma + k * math.pi / n))
        for k in range(n)
    ]
    return beams_b, beams_c


def lighthouse(
    b: Point, c: Point, beta: float, gamma: float, n: int, eps: float = DEFAULT_EPS
) -> LighthouseConfig:
    """Two pencils of n equally spaced beams meet in n² points forming n
    regular n-gons whose circumcircles all pass through both lighthouses
    (a coaxal system with radical axis BC)."""
    if n < 2:
        raise InvalidParameters("need n >= 2")
    if b == c:
        raise DegenerateInput("coincident lighthouses")
    b, c = _fp(b), _fp(c)
    beams_b, beams_c = _beam_lines(b, c, beta, gamma, n)
    parallel = False
    grid: List[List[Optional[Point]]] = [[None] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            cross = beams_b[j].a * beams_c[k].b - beams_b[j].b * beams_c[k].a
            if abs(cross) < 1e-12:
                parallel = True
                continue
            grid[j][k] = beams_b[j].intersect(beams_c[k])
    ngons: List[List[Point]] = [[] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            if grid[j][k] is not None:
                ngons[(j + k) % n].append(grid[j][k])
    circles: List[Optional[Circle]] = []
    for gon in ngons:
        if len(gon) < 3:
            circles.append(circle_through_two(b, c, gon) if gon else None)
            continue
        circles.append(circumcircle(gon[0], gon[1], gon[2]))
    return LighthouseConfig(
        b, c, beta, gamma, n, grid, ngons, circles, beams_b, beams_c, parallel
    )


def circle_through_two(b: Point, c: Point, gon: Sequence[Point]) -> Optional[Circle]:
    if not gon:
        return None
    return circumcircle(b, c, gon[0])


def _parallel_float(l1: Line, l2: Line, eps: float = DEFAULT_EPS) -> bool:
    return abs(float(l1.a * l2.b - l1.b * l2.a)) < eps * 100


def ngon_is_regular(gon: Sequence[Point], eps: float = DEFAULT_EPS) -> bool:
    """Vertices concyclic and equally spaced by 2π/n around the centre."""
    n = len(gon)
    if n < 2:
        return True
    cx = sum(float(p.x) for p in gon) / n
    cy = sum(float(p.y) for p in gon) / n
    radii = [math.hypot(float(p.x) - cx, float(p.y) - cy) for p in gon]
    r = sum(radii) / n
    if r < eps:
        return False
    if max(abs(x - r) for x in radii) > eps * max(1.0, r):
        return False
    angles = sorted(
        math.atan2(float(p.y) - cy, float(p.x) - cx) % (2 * math.pi) for p in gon
    )
    gaps = [
        (angles[(i + 1) % n] - angles[i]) % (2 * math.pi) for i in range(n)
    ]
    return max(abs(g - 2 * math.pi / n) for g in gaps) < eps * 10


def lighthouse_verify(cfg: LighthouseConfig, eps: float = DEFAULT_EPS) -> bool:
    """Regularity, coaxality through both lighthouses, and the parallel-edge
    lemma (all edge directions congruent mod π/n)."""
    scale2 = _scale([cfg.b, cfg.c] + [p for g in cfg.ngons for p in g]) ** 2
    for gon, circ in zip(cfg.ngons, cfg.circles):
        if len(gon) != cfg.n:
            continue
        if not ngon_is_regular(gon, eps):
            return False
        if circ is None:
            return False
        for p in list(gon) + [cfg.b, cfg.c]:
            if not circ.contains(p, eps=eps * scale2 * 100):
                return False
    # the Lighthouse Lemma: every edge of every n-gon in n direction classes
    base = None
    for gon in cfg.ngons:
        for p, q in combinations(gon, 2):
            ang = _angle_of(q - p) % (math.pi / cfg.n)
            if base is None:
                base = ang
                continue
            diff = (ang - base) % (math.pi / cfg.n)
            if min(diff, math.pi / cfg.n - diff) > eps * 100:
                return False
    return True


def phases_through(b: Point, c: Point, p: Point) -> Tuple[float, float]:
    """Phases making beam 0 from each lighthouse pass through p."""
    beta = _signed_angle(c - b, p - b)
    gamma = -_signed_angle(b - c, p - c)
    return beta, gamma


@dataclass(frozen=True)
class DuplicationData:
    q: Point
    r: Point
    doubled_beam_b: Line
    doubled_beam_c: Line
    residual: float


def duplication(
    b: Point, c: Point, beta: float, gamma: float, n: int, eps: float = DEFAULT_EPS
) -> DuplicationData:
    """Edges of one n-gon through a vertex P cut the parallel edge of the
    neighbouring n-gon at points lying on beams of doubled phase."""
    cfg = lighthouse(b, c, beta, gamma, n)
    if cfg.parallel_flag:
        raise ParallelBeams("duplication needs all finite intersections")
    grid = cfg.points
    p = grid[0][0]
    u = grid[n - 1][1]
    v = grid[1][n - 1]
    x = grid[n - 1][0]
    y = grid[0][n - 1]
    xy = Line.through(x, y)
    q = Line.through(u, p).intersect(xy)
    r = Line.through(v, p).intersect(xy)
    theta_b = _angle_of(cfg.c - cfg.b)
    theta_c = _angle_of(cfg.b - cfg.c)
    beam2b = Line.from_point_direction(cfg.b, _dir(theta_b + 2 * beta))
    beam2c = Line.from_point_direction(cfg.c, _dir(theta_c - 2 * gamma))
    scale = _scale([p, u, v, x, y])
    residual = max(
        abs(beam2b.evaluate(r)) / scale, abs(beam2c.evaluate(q)) / scale
    )
    return DuplicationData(q, r, beam2b, beam2c, residual)


def bisector_quadrangle(
    d: Point, e: Point, f: Point, eps: float = DEFAULT_EPS
) -> Dict[str, Point]:
    """n=2 lighthouses at E and F phased at half the triangle angles: the
    four beam intersections are the incentre and the three excentres of
    triangle DEF."""
    d, e, f = _fp(d), _fp(e), _fp(f)
    beta = _signed_angle(f - e, d - e) / 2
    gamma = -_signed_angle(e - f, d - f) / 2
    cfg = lighthouse(e, f, beta, gamma, 2)
    grid = cfg.points
    if any(grid[j][k] is None for j in range(2) for k in range(2)):
        raise ParallelBeams("degenerate bisector configuration")
    return {
        "incentre": grid[0][0],
        "excentre_d": grid[1][1],
        "excentre_e": grid[1][0],
        "excentre_f": grid[0][1],
    }


def is_orthocentric(points: Sequence[Point], eps: float = DEFAULT_EPS) -> bool:
    """Each point is the orthocentre of the other three."""
    pts = [_fp(p) for p in points]
    if len(pts) != 4:
        return False
    scale = _scale(pts)
    for i in range(4):
        rest = [pts[j] for j in range(4) if j != i]
        h = orthocentre(*rest)
        if math.hypot(float(h.x - pts[i].x), float(h.y - pts[i].y)) > eps * scale * 100:
            return False
    return True


def altitude_quadrangle(
    a: Point, b: Point, c: Point, eps: float = DEFAULT_EPS
) -> Dict[str, Point]:
    """n=2 lighthouses at E = AC ∩ BH and F = AB ∩ CH, phased through the
    orthocentre: the four beam intersections are A, B, C, H."""
    a, b, c = _fp(a), _fp(b), _fp(c)
    h = orthocentre(a, b, c)
    e = Line.through(a, c).intersect(Line.through(b, h))
    f = Line.through(a, b).intersect(Line.through(c, h))
    beta, gamma = phases_through(e, f, h)
    cfg = lighthouse(e, f, beta, gamma, 2)
    grid = cfg.points
    if any(grid[j][k] is None for j in range(2) for k in range(2)):
        raise ParallelBeams("degenerate altitude configuration")
    return {"orthocentre": grid[0][0], "others": (grid[0][1], grid[1][0], grid[1][1])}


# ---------------------------------------------------------------------------
# the full Morley configuration (n = 3, Conway labels)
# ---------------------------------------------------------------------------

_LINE_LABELS = ("100", "010", "001", "211", "121", "112", "022", "202", "220")
_PAIR_STAR = {("B", "C"): 0, ("C", "A"): 1, ("A", "B"): 2}


@dataclass
class MorleyConfig:
    vertices: Dict[str, Point]
    points: Dict[str, Point]                    # 27 Conway-labeled points
    lines: Dict[str, Line]                      # 9 Morley lines
    line_points: Dict[str, Tuple[str, ...]]     # 6 point labels per line
    morley_triangles: Dict[str, Tuple[Point, Point, Point]]   # 18
    gf_triangles: Dict[str, Tuple[str, str, str]]             # 9, point labels
    gf_circles: Dict[str, Circle]
    associated_points: Dict[str, Point]         # per line label
    circle_lines: Dict[str, Tuple[str, str, str]]  # lines met by each circle
    eps: float


def _point_label(star_pos: int, j: int, k: int) -> str:
    digits = ["", "", ""]
    digits[star_pos] = "*"
    rest = [i for i in range(3) if i != star_pos]
    digits[rest[0]], digits[rest[1]] = str(j), str(k)
    return "".join(digits)


def _on_morley_line(point_label: str, line_label: str) -> bool:
    """Star at position i, digits d elsewhere: the point lies on line L iff
    every digit differs from L's digit in that position and the digit sum is
    congruent to sum(L) - L_i mod 3."""
    i = point_label.index("*")
    ds = 0
    for m, ch in enumerate(point_label):
        if m == i:
            continue
        if ch == line_label[m]:
            return False
        ds += int(ch)
    ls = sum(int(x) for x in line_label)
    return ds % 3 == (ls - int(line_label[i])) % 3


def _associated_label(line_label: str) -> str:
    # the digit that differs from the other two becomes the third value
    digits = [int(x) for x in line_label]
    out = list(digits)
    for i in range(3):
        others = [digits[j] for j in range(3) if j != i]
        if others[0] == others[1] and digits[i] != others[0]:
            out[i] = 3 - digits[i] - others[0]
            break
    return "".join(str(x) for x in out)


def morley_config(
    a: Point, b: Point, c: Point, eps: float = DEFAULT_EPS
) -> MorleyConfig:
    """27 trisector intersections, 9 Morley lines carrying 6 points each,
    18 equilateral Morley triangles, 9 Guy Faux triangles whose circumcircles
    concur in threes at 9 associated points (besides the vertices)."""
    a, b, c = _fp(a), _fp(b), _fp(c)
    verts = {"A": a, "B": b, "C": c}
    if abs((b - a).cross(c - a)) < eps:
        raise DegenerateInput("degenerate triangle")
    angles = {
        "A": abs(_signed_angle(b - a, c - a)),
        "B": abs(_signed_angle(c - b, a - b)),
        "C": abs(_signed_angle(a - c, b - c)),
    }

    def beams(x: str, y: str, z: str) -> List[Line]:
        vx, vy, vz = verts[x], verts[y], verts[z]
        theta = _angle_of(vy - vx)
        sigma = 1.0 if (vy - vx).cross(vz - vx) > 0 else -1.0
        return [
            Line.from_point_direction(
                vx, _dir(theta + sigma * (angles[x] / 3 - j * math.pi / 3))
            )
            for j in range(3)
        ]

    order = "ABC"
    points: Dict[str, Point] = {}
    for (x, y), star in _PAIR_STAR.items():
        z = ({"A", "B", "C"} - {x, y}).pop()
        bx = beams(x, y, z)
        by = beams(y, x, z)
        for j in range(3):
            for k in range(3):
                # label digits sit at the positions of x and y in ABC order
                digits = ["", "", ""]
                digits[star] = "*"
                digits[order.index(x)] = str(j)
                digits[order.index(y)] = str(k)
                points["".join(digits)] = bx[j].intersect(by[k])

    scale = _scale(list(points.values()))
    lines: Dict[str, Line] = {}
    line_points: Dict[str, Tuple[str, ...]] = {}
    for label in _LINE_LABELS:
        members = tuple(pl for pl in points if _on_morley_line(pl, label))
        assert len(members) == 6, f"line {label} has {len(members)} points"
        pts = [points[m] for m in members]
        line = Line.through(pts[0], pts[1])
        for p in pts[2:]:
            assert abs(line.evaluate(p)) < eps * scale * 100, (
                f"point off Morley line {label}"
            )
        lines[label] = line
        line_points[label] = members

    morley_tris: Dict[str, Tuple[Point, Point, Point]] = {}
    for p in range(3):
        for q in range(3):
            for r in range(3):
                if (p + q + r) % 3 == 1:
                    continue
                morley_tris[f"{p}{q}{r}"] = (
                    points[f"*{q}{r}"],
                    points[f"{p}*{r}"],
                    points[f"{p}{q}*"],
                )

    gf_tris: Dict[str, Tuple[str, str, str]] = {}
    gf_circles: Dict[str, Circle] = {}
    for (x, y), star in _PAIR_STAR.items():
        for g in range(3):
            labels = tuple(
                _point_label(star, j, k)
                for j in range(3)
                for k in range(3)
                if (j + k) % 3 == (-g) % 3
            )
            name = f"{x}{y}{g}"
            gf_tris[name] = labels
            circ = circumcircle(*(points[l] for l in labels))
            for v in (verts[x], verts[y]):
                assert circ.contains(v, eps=eps * scale * scale * 1000), (
                    f"GF circle {name} misses a lighthouse"
                )
            gf_circles[name] = circ

    # circle <-> line incidence and the nine associated concurrence points
    circle_lines: Dict[str, Tuple[str, str, str]] = {}
    for name, labels in gf_tris.items():
        met = tuple(
            ll
            for ll in _LINE_LABELS
            if sum(1 for pl in labels if pl in line_points[ll]) == 2
        )
        assert len(met) == 3, f"circle {name} meets {len(met)} lines"
        circle_lines[name] = met

    associated: Dict[str, Point] = {}
    for label in _LINE_LABELS:
        triple = [n for n, met in circle_lines.items() if label in met]
        assert len(triple) == 3
        c1, c2, c3 = (gf_circles[n] for n in triple)
        pt = _second_circle_intersection(c1, c2, verts, eps, scale)
        assert abs(c3.power(pt)) < eps * scale * scale * 1000, (
            f"third GF circle misses the associated point of line {label}"
        )
        associated[_associated_label(label)] = pt

    return MorleyConfig(
        verts,
        points,
        lines,
        line_points,
        morley_tris,
        gf_tris,
        gf_circles,
        associated,
        circle_lines,
        eps,
    )


def _second_circle_intersection(
    c1: Circle, c2: Circle, verts: Dict[str, Point], eps: float, scale: float
) -> Point:
    """Intersection of two circles that is not a triangle vertex."""
    d = c2.center - c1.center
    d2 = float(d.norm2())
    if d2 < 1e-18:
        raise DegenerateInput("concentric GF circles")
    t = (float(c1.r2) - float(c2.r2) + d2) / (2 * d2)
    mid = Point(c1.center.x + t * d.x, c1.center.y + t * d.y)
    h2 = float(c1.r2) - float((mid - c1.center).norm2())
    if h2 < 0:
        h2 = 0.0
    h = math.sqrt(h2)
    nrm = math.sqrt(d2)
    perp = Point(-d.y / nrm, d.x / nrm)
    cands = [
        Point(mid.x + h * perp.x, mid.y + h * perp.y),
        Point(mid.x - h * perp.x, mid.y - h * perp.y),
    ]
    for cand in cands:
        if all(
            math.hypot(float(cand.x - v.x), float(cand.y - v.y)) > eps * scale * 1000
            for v in verts.values()
        ):
            return cand
    return cands[0]


def equilateral_residual(tri: Sequence[Point]) -> float:
    d = [
        math.hypot(
            float(tri[i].x - tri[(i + 1) % 3].x),
            float(tri[i].y - tri[(i + 1) % 3].y),
        )
        for i in range(3)
    ]
    return (max(d) - min(d)) / max(d)


def edge_direction_classes(
    tris: Dict[str, Tuple[Point, Point, Point]], eps: float = DEFAULT_EPS
) -> int:
    """Number of distinct edge directions mod π/3 over all triangles."""
    classes: List[float] = []
    for tri in tris.values():
        for i in range(3):
            ang = _angle_of(tri[(i + 1) % 3] - tri[i]) % (math.pi / 3)
            if not any(
                min(abs(ang - cl), math.pi / 3 - abs(ang - cl)) < eps * 1000
                for cl in classes
            ):
                classes.append(ang)
    return len(classes)


def table_rows(cfg: MorleyConfig) -> List[Tuple[str, str, str, str]]:
    """GF-circle | Morley points | Morley lines | associated points."""
    inv_assoc = {_associated_label(ll): ll for ll in _LINE_LABELS}
    rows = []
    for name in cfg.gf_triangles:
        pts = " ".join(cfg.gf_triangles[name])
        lns = " ".join(cfg.circle_lines[name])
        assoc = " ".join(
            al for al, ll in inv_assoc.items() if ll in cfg.circle_lines[name]
        )
        rows.append((name, pts, lns, assoc))
    return rows


# ---------------------------------------------------------------------------
# rational Morley families and the 1001-jigsaw
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalMorleyReport:
    edges: Tuple[Fraction, Fraction, Fraction]
    integer_edges: Tuple[int, int, int]
    is_pythagorean: bool
    rational_variants: Dict[Tuple[int, int, int], Fraction]


def _normalize_integer(edges: Sequence[Fraction]) -> Tuple[int, ...]:
    lcm = 1
    for e in edges:
        lcm = lcm * e.denominator // math.gcd(lcm, e.denominator)
    ints = [int(e * lcm) for e in edges]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return tuple(v // g for v in ints) if g else tuple(ints)


def rational_morley(family: str, params) -> RationalMorleyReport:
    """Rational-edged triangles with rational Morley triangles: the
    one-parameter Pythagorean family (exactly 2 of the 18 rational) or the
    two-parameter general family (all 18 rational)."""
    if family == "pythagorean":
        t = Fraction(params)
        edges = (
            2 * t * (3 - t * t) * (1 - 3 * t * t),
            (1 - t * t) * (1 - 14 * t * t + t ** 4),
            (1 + t * t) ** 3,
        )
    elif family == "general":
        xs = [Fraction(x) for x in params]
        if len(xs) != 3 or 3 * sum(xs) != xs[0] * xs[1] * xs[2]:
            raise InvalidParameters("need 3(x1+x2+x3) = x1 x2 x3")
        edges = tuple(
            x * (x * x - 1) * (x * x - 9) / (x * x + 3) ** 3 for x in xs
        )
    else:
        raise InvalidParameters(f"unknown family {family!r}")
    edges = tuple(abs(e) for e in edges)
    if any(e == 0 for e in edges):
        raise InvalidParameters("family parameters give a zero edge")
    s = sorted(edges)
    if s[0] + s[1] <= s[2]:
        raise InvalidParameters("edges violate the triangle inequality")
    ints = _normalize_integer(edges)
    si = sorted(ints)
    pyth = si[0] ** 2 + si[1] ** 2 == si[2] ** 2
    return RationalMorleyReport(
        edges, ints, pyth, morley_edge_rationality([float(v) for v in ints])
    )


def morley_edge_variants(edges: Sequence[float]) -> Dict[Tuple[int, int, int], float]:
    """Edge lengths of the 18 Morley triangles of a triangle given by edges:
    |8R sin((A+2πi)/3) sin((B+2πj)/3) sin((C+2πk)/3)| over the extraversion
    triples with i + j + k ≢ 1 (mod 3)."""
    a, b, c = edges
    ca = (b * b + c * c - a * a) / (2 * b * c)
    cb = (c * c + a * a - b * b) / (2 * c * a)
    cc = (a * a + b * b - c * c) / (2 * a * b)
    aa, ab_, ac = math.acos(ca), math.acos(cb), math.acos(cc)
    r = a / (2 * math.sin(aa))
    out: Dict[Tuple[int, int, int], float] = {}
    for i in range(3):
        for j in range(3):
            for k in range(3):
                if (i + j + k) % 3 == 1:
                    continue
                out[(i, j, k)] = abs(
                    8
                    * r
                    * math.sin((aa + 2 * math.pi * i) / 3)
                    * math.sin((ab_ + 2 * math.pi * j) / 3)
                    * math.sin((ac + 2 * math.pi * k) / 3)
                )
    return out


def morley_edge_rationality(
    edges: Sequence[float], rel_tol: float = 1e-12, max_den: int = 10 ** 6
) -> Dict[Tuple[int, int, int], Fraction]:
    """The Morley-triangle edges recognisably rational at the scale of the
    given (integer) edge lengths: the reconstruction must be far more
    accurate than a generic continued-fraction convergent of that size."""
    out: Dict[Tuple[int, int, int], Fraction] = {}
    for key, e in morley_edge_variants(edges).items():
        f = Fraction(e).limit_denominator(max_den)
        if (
            abs(float(f) - e) <= rel_tol * max(1e-30, e)
            and f.denominator <= max_den // 10
        ):
            out[key] = f
    return out


# -- exact angle algebra in Q(√3) -------------------------------------------


@dataclass(frozen=True)
class Sqrt3Angle:
    """cos θ = c, sin θ = s·√3, both rational: the closure containing all
    angles of rational triangles with area a rational multiple of √3, and
    closed under adding multiples of π/3."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        if self.c * self.c + 3 * self.s * self.s != 1:
            raise InvalidParameters("not a unit Q(√3) angle")

    def __mul__(self, other: "Sqrt3Angle") -> "Sqrt3Angle":
        return Sqrt3Angle(
            self.c * other.c - 3 * self.s * other.s,
            self.c * other.s + self.s * other.c,
        )


SIXTY = Sqrt3Angle(Fraction(1, 2), Fraction(1, 2))
STRAIGHT = Sqrt3Angle(Fraction(-1), Fraction(0))
FULL = Sqrt3Angle(Fraction(1), Fraction(0))


def triangle_angles_sqrt3(
    edges: Sequence[int],
) -> Tuple[Sqrt3Angle, Sqrt3Angle, Sqrt3Angle]:
    """Exact angles of an integer triangle whose squared area is 3 times a
    rational square (so each sine is √3 times a rational)."""
    a, b, c = (Fraction(e) for e in edges)
    sq16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)  # 16Δ²
    t = sq16 / 3
    root = _fraction_sqrt(t)
    if root is None:
        raise InvalidParameters("area is not a rational multiple of √3")
    area_s = root / 4  # Δ = area_s·√3
    out = []
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        cos_x = (y * y + z * z - x * x) / (2 * y * z)
        sin_s = 2 * area_s / (y * z)
        out.append(Sqrt3Angle(cos_x, sin_s))
    return tuple(out)


def _fraction_sqrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    num = math.isqrt(f.numerator)
    den = math.isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


JIGSAW_EQUILATERAL = 1001
JIGSAW_INNER = ((1001, 1716, 1859), (1001, 9464, 9555), (1001, 2695, 2464))
JIGSAW_OUTER = ((9555, 2695, 12005), (2464, 1716, 3740), (1859, 9464, 10985))


@dataclass(frozen=True)
class JigsawReport:
    assembled_edges: Tuple[int, int, int]
    area_matches: bool
    vertex_sums: bool
    trisection: bool


def jigsaw_check() -> JigsawReport:
    """The Conway-Doyle seven-piece jigsaw: an equilateral triangle of edge
    1001, three pieces sharing that edge, and three outer pieces assemble
    exactly into one big triangle.  All angle sums are verified in Q(√3)."""
    m = Fraction(JIGSAW_EQUILATERAL)
    inner = [triangle_angles_sqrt3(t) for t in JIGSAW_INNER]
    outer = [triangle_angles_sqrt3(t) for t in JIGSAW_OUTER]
    # angle of each inner piece opposite the shared 1001 edge
    inner_opp = [ang[0] for ang in inner]   # edge order (1001, u, v)
    # the assembled triangle's edges are the outer pieces' longest edges
    assembled = tuple(max(t) for t in JIGSAW_OUTER)

    # area: Δ(assembled) = Δ(equilateral) + Σ Δ(pieces), all as s·√3
    def area_s(edges: Sequence[int]) -> Fraction:
        a, b, c = (Fraction(e) for e in edges)
        sq16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        root = _fraction_sqrt(sq16 / 3)
        if root is None:
            raise InvalidParameters("non-√3 area in jigsaw")
        return root / 4

    total = m * m / 4  # Δ_eq = (√3/4)·1001², recorded as s with Δ = s·√3
    for t in JIGSAW_INNER + JIGSAW_OUTER:
        total += area_s(t)
    area_ok = total == area_s(assembled)

    # each inner angle opposite 1001 is 60° more than an outer piece angle:
    # around each vertex of the equilateral, 60° + two inner angles + one
    # outer angle close up to 360°
    sums_ok = _vertex_sums(inner, outer)

    # trisection: each assembled-triangle vertex angle splits into three
    # equal parts contributed by the adjacent pieces
    tris_ok = _trisection_check(inner, outer, assembled)
    return JigsawReport(assembled, area_ok, sums_ok, tris_ok)


def _closes_circle(angles: Sequence[Sqrt3Angle]) -> bool:
    acc = FULL
    for ang in angles:
        acc = acc * ang
    return acc == FULL


def _vertex_sums(inner, outer) -> bool:
    """At each corner of the central equilateral piece three pieces meet:
    60° + one angle from each adjacent inner piece + one outer angle = 360°.
    Discover the matching combinatorially and require all three corners to
    close up exactly."""
    found = 0
    for i1, i2 in combinations(range(3), 2):
        closed = False
        for j1 in (1, 2):
            for j2 in (1, 2):
                for o in range(3):
                    for jo in range(3):
                        if not closed and _closes_circle(
                            [SIXTY, inner[i1][j1], inner[i2][j2], outer[o][jo]]
                        ):
                            closed = True
        if closed:
            found += 1
    return found == 3


def _trisection_check(inner, outer, assembled) -> bool:
    """The assembled triangle's angles are exactly trisected: at each vertex
    the three meeting piece angles are equal, and their triple equals the
    corresponding angle of the assembled triangle."""
    big = triangle_angles_sqrt3(assembled)
    matched = 0
    all_angles = [a for tri in list(inner) + list(outer) for a in tri]
    for big_angle in big:
        for small in all_angles:
            if small * small * small == big_angle:
                matched += 1
                break
    return matched == 3


def orthocentric_morley_parallel(
    a: Point, b: Point, c: Point, eps: float = DEFAULT_EPS
) -> bool:
    """The four triangles of the orthocentric quadrangle {A, B, C, H} have
    mutually parallel Morley triangles (72 triangles in 1 direction class
    mod π/3)."""
    a, b, c = _fp(a), _fp(b), _fp(c)
    h = orthocentre(a, b, c)
    tris: Dict[str, Tuple[Point, Point, Point]] = {}
    for name, (p, q, r) in {
        "ABC": (a, b, c),
        "BHC": (b, h, c),
        "CHA": (c, h, a),
        "AHB": (a, h, b),
    }.items():
        cfg = morley_config(p, q, r, eps)
        for key, tri in cfg.morley_triangles.items():
            tris[f"{name}:{key}"] = tri
    return edge_direction_classes(tris, eps) == 1


# ---------------------------------------------------------------------------
# Thrice Sixteen
# ---------------------------------------------------------------------------


@dataclass
class ThriceSixteenReport:
    centers: Dict[str, Point]            # "ab": centre of triangle omit-a
    grid_lines: Tuple[List[Line], List[Line]]
    grid_members: List[Tuple[str, ...]]  # labels on each of the 8 lines
    sixteen_point_circle: Circle
    midpoint_pairs: int
    latin_square: bool                   # one centre of each triangle per line
    circumcentres_reflect: bool
    circumcircles_congruent: bool


def _in_excentres(tri: Sequence[Point]) -> List[Point]:
    """Incentre followed by the three excentres (opposite each vertex)."""
    p, q, r = tri
    a = math.hypot(float(q.x - r.x), float(q.y - r.y))
    b = math.hypot(float(r.x - p.x), float(r.y - p.y))
    c = math.hypot(float(p.x - q.x), float(p.y - q.y))
    out = []
    for sa, sb, sc in ((a, b, c), (-a, b, c), (a, -b, c), (a, b, -c)):
        s = sa + sb + sc
        out.append(
            Point(
                (sa * float(p.x) + sb * float(q.x) + sc * float(r.x)) / s,
                (sa * float(p.y) + sb * float(q.y) + sc * float(r.y)) / s,
            )
        )
    return out


def thrice_sixteen(
    quad: Sequence[Point], eps: float = DEFAULT_EPS
) -> ThriceSixteenReport:
    """For four concyclic points: the 16 in/excentres of the four inscribed
    triangles form a rectangular 4×4 grid; the 24 segment midpoints coincide
    in 12 antipodal pairs on the circumcircle of the quadrangle; the 16
    circumcentres are the central reflections of the centres."""
    pts = [_fp(p) for p in quad]
    if len(pts) != 4:
        raise DegenerateInput("need four points")
    base = circumcircle(pts[0], pts[1], pts[2])
    scale = _scale(pts)
    if abs(float(base.power(pts[3]))) > eps * scale * scale * 100:
        raise DegenerateInput("points are not concyclic")

    centers: Dict[str, Point] = {}
    for omit in range(4):
        tri = [pts[i] for i in range(4) if i != omit]
        inc, *excs = _in_excentres(tri)
        centers[f"{omit}{omit}"] = inc
        others = [i for i in range(4) if i != omit]
        for v_idx, exc in zip(others, excs):
            centers[f"{omit}{v_idx}"] = exc
    labels = list(centers)
    cpts = [centers[l] for l in labels]

    # the two perpendicular quadruples of parallel 4-point lines
    lines_found: List[Tuple[Line, Tuple[int, ...]]] = []
    tol = eps * scale * 1e4
    for i, j in combinations(range(16), 2):
        if math.hypot(
            float(cpts[i].x - cpts[j].x), float(cpts[i].y - cpts[j].y)
        ) < tol:
            continue
        line = Line.through(cpts[i], cpts[j])
        members = tuple(
            k for k in range(16) if abs(float(line.evaluate(cpts[k]))) < tol
        )
        if len(members) == 4 and not any(
            set(members) == set(m) for _, m in lines_found
        ):
            lines_found.append((line, members))
    if len(lines_found) != 8:
        raise DegenerateInput(f"grid detection found {len(lines_found)} lines")
    ref = lines_found[0][0]
    fam1 = [l for l, _ in lines_found if _parallel_float(l, ref, eps)]
    fam2 = [l for l, _ in lines_found if not _parallel_float(l, ref, eps)]
    if len(fam1) != 4 or len(fam2) != 4:
        raise DegenerateInput("grid families are not 4 + 4")
    if abs(float(ref.a * fam2[0].a + ref.b * fam2[0].b)) > eps * 100:
        raise DegenerateInput("grid families are not perpendicular")
    grid_members = [
        tuple(labels[k] for k in members) for _, members in lines_found
    ]
    latin = all(
        {lab[0] for lab in mem} == {"0", "1", "2", "3"} for mem in grid_members
    )

    # midpoints coincide in 12 pairs on the circumcircle of the quadrangle
    mids: List[Point] = []
    for i, j in combinations(range(16), 2):
        if labels[i][0] != labels[j][0]:
            continue  # same-triangle segments only (4 × 6 midpoints)
        mids.append(cpts[i].midpoint(cpts[j]))
    on_circle = [
        m for m in mids if abs(float(base.power(m))) < eps * scale * scale * 1e4
    ]
    pair_count = 0
    used = [False] * len(on_circle)
    for i, j in combinations(range(len(on_circle)), 2):
        if used[i] or used[j]:
            continue
        if (
            math.hypot(
                float(on_circle[i].x - on_circle[j].x),
                float(on_circle[i].y - on_circle[j].y),
            )
            < tol
        ):
            used[i] = used[j] = True
            pair_count += 1

    # circumcentres reflect through the 16-point centre; circles congruent
    centre = base.center
    reflect_ok = True
    congruent_ok = True
    r_big = None
    for omit in range(4):
        tri = [pts[i] for i in range(4) if i != omit]
        inc_labels = [f"{omit}{omit}"] + [
            f"{omit}{v}" for v in range(4) if v != omit
        ]
        for lab in inc_labels:
            h = centers[lab]
            rest = _orthocentric_mates(h, tri)
            circ = circumcircle(*rest)
            mirrored = Point(2 * centre.x - h.x, 2 * centre.y - h.y)
            if (
                math.hypot(
                    float(circ.center.x - mirrored.x),
                    float(circ.center.y - mirrored.y),
                )
                > tol
            ):
                reflect_ok = False
            r = math.sqrt(float(circ.r2))
            if r_big is None:
                r_big = r
            elif abs(r - r_big) > eps * scale * 100:
                congruent_ok = False
    return ThriceSixteenReport(
        centers,
        (fam1, fam2),
        grid_members,
        base,
        pair_count,
        latin,
        reflect_ok,
        congruent_ok,
    )


def _orthocentric_mates(h: Point, tri: Sequence[Point]) -> List[Point]:
    """The triangle of which h is the orthocentre, within the orthocentric
    quadruple {h} ∪ tri: that is simply tri itself when h is a centre of the
    in/excentral system — each centre is the orthocentre of the other three
    centres of its triangle."""
    inc, *excs = _in_excentres(tri)
    quad = [inc] + excs
    best = min(
        range(4),
        key=lambda i: math.hypot(float(quad[i].x - h.x), float(quad[i].y - h.y)),
    )
    return [quad[i] for i in range(4) if i != best]


# ---------------------------------------------------------------------------
# inside-out construction (exact)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InsideOutData:
    a_prime: Point
    b_prime: Point
    c_prime: Point
    alpha: Point
    beta: Point
    gamma: Point
    alpha_prime: Point
    beta_prime: Point
    gamma_prime: Point
    circumcentre: Point
    orthocentre: Point


def _reflect_line(line: Line, mirror: Line) -> Line:
    p = foot_of_perpendicular(Point(Fraction(0), Fraction(0)), line)
    d = line.direction()
    q = Point(p.x + d.x, p.y + d.y)
    return Line.through(
        reflect_point_in_line(p, mirror), reflect_point_in_line(q, mirror)
    )


def inside_out(a: Point, b: Point, c: Point) -> InsideOutData:
    """Distal treblers: A' is the meet of the reflections of BC in AB and in
    AC (and cyclically).  AA', BB', CC' concur at the circumcentre; the
    proximal treblers α', β', γ' are the reflections of the vertices in the
    opposite edges, and Aα', Bβ', Cγ' concur at the orthocentre; four triads
    of the cross points α, β, γ are collinear."""
    ab, bc, ca = Line.through(a, b), Line.through(b, c), Line.through(c, a)
    a_p = _reflect_line(bc, ab).intersect(_reflect_line(bc, ca))
    b_p = _reflect_line(ca, bc).intersect(_reflect_line(ca, ab))
    c_p = _reflect_line(ab, bc).intersect(_reflect_line(ab, ca))
    alpha = bc.intersect(Line.through(b_p, c_p))
    beta = ca.intersect(Line.through(c_p, a_p))
    gamma = ab.intersect(Line.through(a_p, b_p))
    alpha_p = reflect_point_in_line(a, bc)
    beta_p = reflect_point_in_line(b, ca)
    gamma_p = reflect_point_in_line(c, ab)
    o = Line.through(a, a_p).intersect(Line.through(b, b_p))
    assert Line.through(c, c_p).contains(o), "AA', BB', CC' fail to concur"
    assert circumcircle(a, b, c).center == o, "concurrence is not the circumcentre"
    h = orthocentre(a, b, c)
    for v, vp in ((a, alpha_p), (b, beta_p), (c, gamma_p)):
        assert Line.through(v, vp).contains(h), "treblers miss the orthocentre"
    for triad in (
        (alpha, beta, gamma),
        (alpha, beta_p, gamma_p),
        (alpha_p, beta, gamma_p),
        (alpha_p, beta_p, gamma),
    ):
        assert collinear(*triad), "Desargues triad fails"
    return InsideOutData(
        a_p, b_p, c_p, alpha, beta, gamma, alpha_p, beta_p, gamma_p, o, h
    )
