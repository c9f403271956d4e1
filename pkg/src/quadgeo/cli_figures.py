"""Scene construction, deterministic SVG rendering, figure recipes,
fixtures, plain-text tables, and the verification-suite runner behind the
command-line interface."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Circle,
    GeometryError,
    Line,
    Point,
    collinear,
    cross_ratio,
    foot_of_perpendicular,
    format_scalar,
    reflect_point_in_line,
)
from . import drozfarny, malfatti, morley, touch, wallace
from .quadrangle import (
    LABELS,
    LabeledQuadrangle,
    euler_range,
    orthocentre,
    quadrate,
    twin,
)


class UnknownFixture(GeometryError):
    pass


class UnknownRecipe(GeometryError):
    pass


class UnknownSuite(GeometryError):
    pass


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

F = Fraction

#: seed triangles; quadration adjoins the orthocentre and the labels
FIXTURES: Dict[str, Tuple[Point, Point, Point]] = {
    "t0": (Point(F(36), F(103)), Point(F(-204), F(-77)), Point(F(132), F(-77))),
}


def fixture(name: str) -> Tuple[Point, Point, Point]:
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}")
    return FIXTURES[name]


def fixture_quadrangle(name: str) -> LabeledQuadrangle:
    return quadrate(*fixture(name))


# ---------------------------------------------------------------------------
# scenes
# ---------------------------------------------------------------------------

Window = Tuple[float, float, float, float]   # xmin, ymin, xmax, ymax


@dataclass(frozen=True)
class SceneElement:
    kind: str           # point | line | circle | polyline | label
    data: tuple
    stroke: str = "solid"      # solid | dashed | dotted | thick
    layer: int = 0


@dataclass
class Scene:
    window: Window
    elements: List[SceneElement] = field(default_factory=list)

    def __post_init__(self):
        x0, y0, x1, y1 = self.window
        if not (x1 > x0 and y1 > y0):
            raise GeometryError("empty scene window")

    def add_point(self, p: Point, layer: int = 2) -> None:
        self.elements.append(
            SceneElement("point", (float(p.x), float(p.y)), "solid", layer)
        )

    def add_line(self, line: Line, stroke: str = "solid", layer: int = 0) -> None:
        seg = _clip_line(line, self.window)
        if seg is not None:
            self.elements.append(SceneElement("line", seg, stroke, layer))

    def add_circle(self, c: Circle, stroke: str = "solid", layer: int = 1) -> None:
        self.elements.append(
            SceneElement(
                "circle",
                (float(c.center.x), float(c.center.y), math.sqrt(float(c.r2))),
                stroke,
                layer,
            )
        )

    def add_polyline(
        self, pts: Sequence[Point], stroke: str = "solid", layer: int = 1,
        closed: bool = False,
    ) -> None:
        coords = tuple((float(p.x), float(p.y)) for p in pts)
        if closed:
            coords = coords + (coords[0],)
        self.elements.append(SceneElement("polyline", coords, stroke, layer))

    def add_label(self, p: Point, text: str, layer: int = 3) -> None:
        self.elements.append(
            SceneElement("label", (float(p.x), float(p.y), text), "solid", layer)
        )


def _clip_line(line: Line, window: Window) -> Optional[tuple]:
    """Liang-Barsky clip of an infinite line to the window rectangle."""
    x0, y0, x1, y1 = window
    a, b, c = float(line.a), float(line.b), float(line.c)
    px = foot_of_perpendicular(Point((x0 + x1) / 2, (y0 + y1) / 2),
                               Line(a, b, c))
    dx, dy = -b, a
    n = math.hypot(dx, dy)
    dx, dy = dx / n, dy / n
    t0, t1 = -math.inf, math.inf
    for p, q in (
        (-dx, float(px.x) - x0),
        (dx, x1 - float(px.x)),
        (-dy, float(px.y) - y0),
        (dy, y1 - float(px.y)),
    ):
        if p == 0:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            t0 = max(t0, r)
        else:
            t1 = min(t1, r)
    if t0 >= t1:
        return None
    return (
        float(px.x) + t0 * dx, float(px.y) + t0 * dy,
        float(px.x) + t1 * dx, float(px.y) + t1 * dy,
    )


# ---------------------------------------------------------------------------
# recipes
# ---------------------------------------------------------------------------

T0_WINDOW: Window = (-310.0, -310.0, 310.0, 310.0)


def _recipe_empty(name: str) -> Scene:
    return Scene((-1.0, -1.0, 1.0, 1.0))


def _quadrangle_edges(q: LabeledQuadrangle) -> List[Line]:
    pairs = [(1, 2), (1, 4), (1, 7), (2, 4), (2, 7), (4, 7)]
    return [q.edge(a, b) for a, b in pairs]


def _recipe_twins(name: str) -> Scene:
    q = fixture_quadrangle(name)
    scene = Scene(T0_WINDOW)
    for e in _quadrangle_edges(q):
        scene.add_line(e)
    tq = twin(q)
    for e in _quadrangle_edges(tq):
        scene.add_line(e, stroke="dashed")
    for lab in LABELS:
        scene.add_point(q.vertex(lab))
        scene.add_label(q.vertex(lab), str(lab))
        scene.add_point(q.twin_vertex(lab))
        scene.add_label(q.twin_vertex(lab), f"{lab}~")
    for (lab, barred), p in sorted(q.midpoints.items()):
        scene.add_point(p)
        scene.add_label(p, f"{lab}{'~' if barred else ''}")
    scene.add_point(q.center)
    scene.add_label(q.center, "0")
    scene.add_circle(q.central_circle, stroke="thick")
    return scene


def _recipe_touch32(name: str) -> Scene:
    q = fixture_quadrangle(name)
    scene = Scene(T0_WINDOW)
    for quad in (q, twin(q)):
        for e in _quadrangle_edges(quad):
            scene.add_line(e, stroke="dotted")
    for quad in (q, twin(q)):
        for lab in LABELS:
            for tc in touch.touch_circles(*quad.face(lab)):
                scene.add_circle(tc.circle)
    scene.add_circle(q.central_circle, stroke="thick", layer=2)
    return scene


def _recipe_gergonne16(name: str) -> Scene:
    q = fixture_quadrangle(name)
    scene = Scene(T0_WINDOW)
    for e in _quadrangle_edges(q):
        scene.add_line(e, stroke="dotted")
    for lab in sorted(LABELS):
        data = touch.gergonne_nagel(*q.face(lab))
        for ext in ("o", "a", "b", "c"):
            p = data.gergonne[ext]
            scene.add_point(p)
            scene.add_label(p, f"G{lab}{ext}")
    scene.add_circle(q.central_circle, stroke="thick")
    return scene


def _recipe_trisequence(name: str) -> Scene:
    q = fixture_quadrangle(name)
    seq = wallace.trisequence(q, "7B", Point(F(-62), F(117)), 11)
    scene = Scene(T0_WINDOW)
    for lab in LABELS:
        scene.add_circle(q.face_circumcircle(lab), stroke="dotted")
    for lname in sorted(seq.lines):
        scene.add_line(seq.lines[lname])
    for node_name in sorted(seq.nodes):
        node = seq.nodes[node_name]
        scene.add_point(node.point)
        scene.add_label(node.point, node_name)
    scene.add_circle(q.central_circle, stroke="thick")
    return scene


def _recipe_star_of_david(name: str) -> Scene:
    q = fixture_quadrangle(name)
    star = wallace.star_of_david(q)
    scene = Scene(T0_WINDOW)
    for line in star.tangent_lines:
        scene.add_line(line, stroke="dotted")
    for tri in star.triangles:
        scene.add_polyline(tri, stroke="thick", closed=True)
    scene.add_circle(q.central_circle)
    # cusp circle of the deltoid: radius 3/2 the circumradius
    r2 = q.central_circle.r2
    scene.add_circle(Circle(q.center, 9 * float(r2)), stroke="dashed")
    return scene


def _recipe_df_envelope(name: str) -> Scene:
    q = fixture_quadrangle(name)
    tri = q.face(7)
    env = drozfarny.df_envelope(tri)
    scene = Scene(T0_WINDOW)
    h = q.vertex(7)
    for i in range(12):
        t = F(2 * i + 1, 25)
        d = Point(1 - t * t, 2 * t)
        try:
            inst = drozfarny.df_line(
                tri,
                (
                    Line.from_point_direction(h, d),
                    Line.from_point_direction(h, Point(-d.y, d.x)),
                ),
            )
        except drozfarny.EdgeParallel:
            continue
        scene.add_line(inst.df, stroke="dotted")
    # the envelope ellipse as a sampled polyline
    f1, f2 = env.conic.focus1, env.conic.focus2
    cx, cy = float(env.center.x), float(env.center.y)
    a = math.sqrt(float(env.axis2)) / 2
    c2 = float(f1.dist2(f2)) / 4
    b = math.sqrt(a * a - c2)
    ux, uy = float(f1.x) - cx, float(f1.y) - cy
    n = math.hypot(ux, uy)
    ux, uy = ux / n, uy / n
    pts = []
    for i in range(256):
        th = 2 * math.pi * i / 256
        e1, e2 = a * math.cos(th), b * math.sin(th)
        pts.append(Point(cx + e1 * ux - e2 * uy, cy + e1 * uy + e2 * ux))
    scene.add_polyline(pts, stroke="thick", closed=True)
    for p in (f1, f2):
        scene.add_point(p)
    scene.add_label(f1, "H")
    scene.add_label(f2, "O")
    scene.add_circle(q.central_circle, stroke="dashed")
    return scene


RECIPES: Dict[str, Callable[[str], Scene]] = {
    "empty": _recipe_empty,
    "twins": _recipe_twins,
    "touch32": _recipe_touch32,
    "gergonne16": _recipe_gergonne16,
    "trisequence": _recipe_trisequence,
    "star-of-david": _recipe_star_of_david,
    "droz-farny-envelope": _recipe_df_envelope,
}


def build_scene(fixture_name: str, recipe: str) -> Scene:
    fixture(fixture_name)
    if recipe not in RECIPES:
        raise UnknownRecipe(f"unknown recipe {recipe!r}")
    return RECIPES[recipe](fixture_name)


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_STROKES = {
    "solid": 'stroke="black" stroke-width="1"',
    "thick": 'stroke="black" stroke-width="2.5"',
    "dashed": 'stroke="black" stroke-width="1" stroke-dasharray="6,4"',
    "dotted": 'stroke="black" stroke-width="1" stroke-dasharray="1.5,3"',
}


def _num(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(scene: Scene) -> bytes:
    """Deterministic SVG: six-decimal coordinates, y-axis flipped to the
    mathematical orientation."""
    x0, y0, x1, y1 = scene.window
    w, h = x1 - x0, y1 - y0

    def fy(y: float) -> float:
        return y1 + y0 - y    # mirror inside the window band

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" '
        f'width="800" height="800">',
    ]
    for el in sorted(
        range(len(scene.elements)),
        key=lambda i: (scene.elements[i].layer, i),
    ):
        e = scene.elements[el]
        style = _STROKES[e.stroke]
        if e.kind == "point":
            x, y = e.data
            out.append(
                f'<circle cx="{_num(x)}" cy="{_num(fy(y))}" r="2.5" fill="black"/>'
            )
        elif e.kind == "line":
            ax, ay, bx, by = e.data
            out.append(
                f'<line x1="{_num(ax)}" y1="{_num(fy(ay))}" '
                f'x2="{_num(bx)}" y2="{_num(fy(by))}" {style}/>'
            )
        elif e.kind == "circle":
            x, y, r = e.data
            out.append(
                f'<circle cx="{_num(x)}" cy="{_num(fy(y))}" r="{_num(r)}" '
                f'fill="none" {style}/>'
            )
        elif e.kind == "polyline":
            pts = " ".join(f"{_num(x)},{_num(fy(y))}" for x, y in e.data)
            out.append(f'<polyline points="{pts}" fill="none" {style}/>')
        elif e.kind == "label":
            x, y, text = e.data
            out.append(
                f'<text x="{_num(x + 4)}" y="{_num(fy(y) - 4)}" '
                f'font-size="10" font-family="monospace">{text}</text>'
            )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _trisequence_table(q: LabeledQuadrangle, seed: Point, max_lines: int) -> str:
    seq = wallace.trisequence(q, "7B", seed, max_lines)
    lines = ["reflect | in edges     | to give      | lying on | line | slope"]
    for r in seq.rows:
        slope = format_scalar(r.slope) if r.slope is not None else "inf"
        lines.append(
            f"{r.reflect:7} | {' '.join(r.in_edges):12} | "
            f"{' '.join(r.to_give):12} | {' '.join(map(str, r.lying_on)):8} | "
            f"{r.line_name}@{r.through}  | {slope}"
        )
    return "\n".join(lines) + "\n"


def table_text(name: str) -> str:
    q = fixture_quadrangle("t0")
    if name == "trisequence":
        return _trisequence_table(q, Point(F(-62), F(117)), 11)
    if name == "apocrypha":
        return _trisequence_table(q, Point(F(-190), F(21)), 17)
    if name == "guylines":
        state = (F(2, 9), F(1, 4), F(1, 3))
        rows = ["label   | kind     | through | line coefficients"]
        for g in malfatti.guylines(state) + malfatti.pegs(state):
            coeffs = " ".join(format_scalar(c) for c in g.line)
            rows.append(f"{g.label:7} | {g.kind:8} | {g.through:7} | {coeffs}")
        return "\n".join(rows) + "\n"
    raise UnknownSuite(f"unknown table {name!r}")


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    cases: int
    exact_passes: int
    approx_passes: int
    max_residual: float
    failures: List[str]

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases > 0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.suite}: {status} "
            f"({self.exact_passes} exact + {self.approx_passes} approx "
            f"of {self.cases} cases, max residual {self.max_residual:.3e})"
        )


def _result(suite: str) -> SuiteResult:
    return SuiteResult(suite, 0, 0, 0, 0.0, [])


def _record(res: SuiteResult, ok: bool, witness: str, exact: bool = True,
            residual: float = 0.0) -> None:
    res.cases += 1
    res.max_residual = max(res.max_residual, abs(residual))
    if ok:
        if exact:
            res.exact_passes += 1
        else:
            res.approx_passes += 1
    else:
        res.failures.append(witness)


def _suite_feuerbach32(field: str, eps: float, rng, count: int) -> SuiteResult:
    res = _result("feuerbach32")
    q = fixture_quadrangle("t0")
    rep = touch.feuerbach_verify(q, eps=0.0 if field == "exact" else eps)
    for label, circle, kind, exact in rep.entries:
        ok = kind.value in ("InternalTangent", "ExternalTangent")
        _record(res, ok, f"touch circle {label} not tangent", exact)
    return res


def _suite_euler(field: str, eps: float, rng, count: int) -> SuiteResult:
    res = _result("euler-harmonic")
    q = fixture_quadrangle("t0")
    for lab in LABELS:
        er = euler_range(q, lab)
        _record(res, er.harmonic(), f"range {lab} not harmonic")
    er = euler_range(q, 7)
    _record(
        res,
        er.de_longchamps == Point(F(-108), F(-153)),
        "deL(124) mismatch",
    )
    return res


def _trisequence_slope_suite(name, seed, max_lines, expected) -> SuiteResult:
    res = _result(name)
    q = fixture_quadrangle("t0")
    seq = wallace.trisequence(q, "7B", seed, max_lines)
    slopes = {r.line_name: r.slope for r in seq.rows}
    for lname, want in expected.items():
        _record(res, slopes.get(lname) == want, f"line {lname}: {slopes.get(lname)} != {want}")
    return res


TRISEQUENCE_SLOPES = {
    "A": F(23, 7), "B": F(-1, 7), "C": F(97, 71), "D": F(-1),
    "E": F(-97, 71), "F": F(1), "G": F(-401, 79), "H": F(1841, 887),
    "I": F(7), "J": F(41, 113), "K": F(17, 31),
}

APOCRYPHA_SLOPES = {
    "A": F(1), "B": F(41, 113), "C": F(7), "D": F(-7, 23), "E": F(-7),
    "F": F(7, 23), "G": F(23, 7), "H": F(71, 97), "I": F(97, 71),
    "J": F(-1, 7), "K": F(503, 329), "L": F(17, 31), "M": F(79, 401),
    "N": F(-1367, 1519), "O": F(-1), "P": F(-71, 97), "Q": F(7, 601),
}


def _suite_trisequence(field, eps, rng, count) -> SuiteResult:
    res = _trisequence_slope_suite(
        "trisequence-table", Point(F(-62), F(117)), 11, TRISEQUENCE_SLOPES
    )
    q = fixture_quadrangle("t0")
    seq = wallace.trisequence(q, "7B", Point(F(-62), F(117)), 11)
    _record(
        res,
        wallace.midpoint_rs(q, seq.nodes["7B"])[1] == (6, 7),
        "7B midpoint (r,s) != (6,7)",
    )
    return res


def _suite_apocrypha(field, eps, rng, count) -> SuiteResult:
    return _trisequence_slope_suite(
        "apocrypha-table", Point(F(-190), F(21)), 17, APOCRYPHA_SLOPES
    )


def _suite_three_cycles(field, eps, rng, count) -> SuiteResult:
    res = _result("three-cycles")
    q = fixture_quadrangle("t0")
    tc = wallace.three_cycles(q)
    _record(res, len(tc.cycles) == 4, "did not find four 3-cycles")
    want = {
        Point(F(-108), F(51)), Point(F(372), F(51)), Point(F(-300), F(51))
    }
    got = {
        reflect_point_in_line(tc.antipodes[(1, 7)], q.edge(a, b))
        for a, b in ((2, 4), (4, 1), (1, 2))
    }
    _record(res, got == want, "reflection triple of (-108,-205) mismatch")
    _record(res, tc.trebled_circle.r2 == 65025, "trebled circle radius != 255")
    homothety = all(
        tc.trebled[l] - q.center == (q.vertices[l] - q.center).scale(-3)
        for l in LABELS
    )
    _record(res, homothety, "trebled quadrangle is not the -3 homothet")
    return res


SODDY_CASES = [
    ((45, 40, 13), "Critical"),
    ((6, 5, 5), "Internal"),
    ((23, 22, 3), "External"),
    ((8, 5, 5), "Critical"),
    ((26, 25, 3), "External"),
]


def _suite_soddy(field, eps, rng, count) -> SuiteResult:
    res = _result("soddy")
    for sides, want in SODDY_CASES:
        got = touch.classify_soddy(*[F(s) for s in sides])
        _record(res, got.kind == want, f"{sides}: {got.kind} != {want}")
    a, b, c = F(26), F(25), F(3)
    cos_a = (b * b + c * c - a * a) / (2 * b * c)
    _record(res, cos_a == F(-7, 25), "(26,25,3) cosA != -7/25")
    done = 0
    while done < count:
        u = F(rng.randint(2, 50), rng.randint(1, 10))
        v = F(rng.randint(2, 50), rng.randint(1, 10))
        try:
            sides = touch.bremner_critical(u, v)
        except touch.DegenerateParameters:
            continue
        got = touch.classify_soddy(*sides)
        _record(res, got.kind == "Critical", f"bremner {u},{v} not critical")
        done += 1
    return res


def _suite_wallace_sweep(field, eps, rng, count) -> SuiteResult:
    res = _result("wallace-sweep")
    q = fixture_quadrangle("t0")
    tri = q.face(7)
    circ = q.face_circumcircle(7)
    base = Point(F(-62), F(117))
    h = q.vertex(7)
    for i in range(count):
        t = F(2 * i + 1, 2 * count + 1)
        s = wallace.rational_circle_point(circ, base, t)
        wd = wallace.wallace_line(tri, s)
        ok = (
            all(wd.line.contains(f) for f in wd.feet)
            and wd.steiner_line.contains(h)
            and q.central_circle.contains(wd.midpoint_T)
        )
        _record(res, ok, f"wallace failure at t={t}")
    return res


def _suite_deltoid(field, eps, rng, count) -> SuiteResult:
    res = _result("deltoid")
    for _ in range(count):
        t = F(rng.randint(1, 400), rng.randint(1, 400))
        _record(res, wallace.deltoid_tangency_check(t), f"deltoid t={t}")
    return res


def _suite_droz_farny(field, eps, rng, count) -> SuiteResult:
    res = _result("droz-farny")
    q = fixture_quadrangle("t0")
    tri = q.face(7)
    h = q.vertex(7)
    env = drozfarny.df_envelope(tri)
    done = 0
    i = 0
    while done < count:
        i += 1
        t = F(i, 4 * count + 1)
        d = Point(1 - t * t, 2 * t)
        pair = (
            Line.from_point_direction(h, d),
            Line.from_point_direction(h, Point(-d.y, d.x)),
        )
        try:
            inst = drozfarny.df_line(tri, pair)
        except drozfarny.EdgeParallel:
            continue
        audit = drozfarny.parabola_tangency_audit(inst)
        ok = (
            collinear(*inst.midpoints)
            and inst.circumcircle.contains(inst.m)
            and q.central_circle.contains(
                foot_of_perpendicular(h, inst.df)
            )
            and drozfarny.envelope_tangency(env, inst)
            and all(audit.values())
        )
        _record(res, ok, f"droz-farny failure at t={t}")
        done += 1
    _record(
        res,
        env.axis2 == 28900
        and {env.conic.focus1, env.conic.focus2}
        == {Point(F(36), F(51)), Point(F(-36), F(-51))},
        "envelope foci/axis mismatch",
    )
    return res


def _suite_malfatti(field, eps, rng, count) -> SuiteResult:
    res = _result("malfatti")
    state = (F(2, 9), F(1, 4), F(1, 3))
    sols = malfatti.solution_states(state)
    for lab in ("3b", "2b"):
        s = sols[lab]
        p = malfatti.radpoint_of_solution(lab, state)
        eq = malfatti.vertical_guyline_equation("A", p, state)
        _record(res, eq == (0, 17, 50), f"guyline via {lab}: {eq}")
    try:
        gl = malfatti.guylines(state)
        _record(res, len(gl) == 64, "guyline count != 64 (48 vertical + 16 Nails)")
    except AssertionError as exc:
        _record(res, False, f"guyline incidence: {exc}")
    try:
        pg = malfatti.pegs(state)
        _record(res, len(pg) == 16, "peG count != 16")
    except AssertionError as exc:
        _record(res, False, f"peG incidence: {exc}")
    audit = malfatti.group_audit(state)
    _record(res, audit.order == 32, "group order != 32")
    _record(res, audit.relations_hold and audit.abc_equals_cba, "group relations fail")
    _record(res, audit.centre == ("0", "3", "5", "6"), "group centre mismatch")
    _record(res, audit.involutions == 19, "involution count != 19")
    _record(
        res,
        malfatti.zero_point_collinearities(state) == 24,
        "0-point collinearities != 24",
    )
    return res


def _suite_morley(field, eps, rng, count) -> SuiteResult:
    res = _result("morley")
    for _ in range(count):
        pts = [Point(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3)]
        if abs(float((pts[1] - pts[0]).cross(pts[2] - pts[0]))) < 1.0:
            _record(res, True, "", exact=False)
            continue
        try:
            cfg = morley.morley_config(*pts)
        except GeometryError:
            _record(res, True, "", exact=False)
            continue
        resid = max(
            morley.equilateral_residual(t) for t in cfg.morley_triangles.values()
        )
        classes = morley.edge_direction_classes(cfg.morley_triangles)
        ok = (
            resid < eps
            and len(cfg.morley_triangles) == 18
            and classes == 1
            and len(cfg.gf_circles) == 9
            and len(cfg.associated_points) == 9
        )
        _record(res, ok, f"morley residual {resid}", exact=False, residual=resid)
    rep = morley.rational_morley("pythagorean", F(1, 4))
    _record(
        res,
        rep.integer_edges == (4888, 495, 4913)
        and 4888 ** 2 + 495 ** 2 == 4913 ** 2,
        "pythagorean t=1/4 triple mismatch",
    )
    jig = morley.jigsaw_check()
    _record(
        res,
        jig.area_matches and jig.vertex_sums and jig.trisection,
        "1001-jigsaw assembly fails",
    )
    return res


def _suite_lighthouse(field, eps, rng, count) -> SuiteResult:
    res = _result("lighthouse")
    b, c = Point(-1.0, 0.0), Point(1.0, 0.0)
    for n in range(2, 7):
        for _ in range(count):
            beta = rng.uniform(0.05, math.pi - 0.05)
            gamma = rng.uniform(0.05, math.pi - 0.05)
            try:
                cfg = morley.lighthouse(b, c, beta, gamma, n)
            except morley.InvalidParameters:
                _record(res, True, "", exact=False)
                continue
            if cfg.parallel_flag:
                _record(res, True, "", exact=False)
                continue
            ok = morley.lighthouse_verify(cfg)
            _record(res, ok, f"lighthouse n={n}", exact=False)
    dup = morley.duplication(b, c, 0.4, 0.7, 3)
    _record(res, dup.residual < eps, "duplication beams off", exact=False,
            residual=dup.residual)
    quad = morley.bisector_quadrangle(
        Point(0.0, 0.0), Point(4.0, 0.0), Point(1.0, 3.0)
    )
    _record(
        res,
        morley.is_orthocentric(list(quad.values())),
        "n=2 bisector grid not orthocentric",
        exact=False,
    )
    return res


def _suite_thrice_sixteen(field, eps, rng, count) -> SuiteResult:
    res = _result("thrice-sixteen")
    for _ in range(count):
        while True:
            ths = sorted(rng.uniform(0, 2 * math.pi) for _ in range(4))
            if min(
                (ths[(i + 1) % 4] - ths[i]) % (2 * math.pi) for i in range(4)
            ) > 0.25:
                break
        r = rng.uniform(3, 20)
        quad = [Point(r * math.cos(t), r * math.sin(t)) for t in ths]
        rep = morley.thrice_sixteen(quad)
        ok = (
            len(rep.centers) == 16
            and rep.midpoint_pairs == 12
            and rep.latin_square
            and rep.circumcentres_reflect
            and rep.circumcircles_congruent
        )
        _record(res, ok, "thrice-sixteen failure", exact=False)
    return res


def _suite_hexaflex(field, eps, rng, count) -> SuiteResult:
    res = _result("hexaflex")
    q = fixture_quadrangle("t0")
    hx = touch.hexaflex(*q.face(7))
    for ext, p in sorted(hx.perspectors.items()):
        _record(
            res,
            p.x * p.x + p.y * p.y == 7225,
            f"perspector {ext} off x²+y²=7225",
        )
    return res


def _suite_rendering(field, eps, rng, count) -> SuiteResult:
    res = _result("rendering")
    for recipe in sorted(RECIPES):
        scene1 = build_scene("t0", recipe)
        scene2 = build_scene("t0", recipe)
        _record(
            res,
            render_svg(scene1) == render_svg(scene2),
            f"nondeterministic render for {recipe}",
        )
    return res


#: suite name -> (runner, modules whose invariants it exercises)
SUITES: Dict[str, Tuple[Callable, Tuple[str, ...]]] = {
    "feuerbach32": (_suite_feuerbach32, ("touch", "quadrangle", "kernel")),
    "euler-harmonic": (_suite_euler, ("quadrangle", "kernel")),
    "trisequence-table": (_suite_trisequence, ("wallace",)),
    "apocrypha-table": (_suite_apocrypha, ("wallace",)),
    "three-cycles": (_suite_three_cycles, ("wallace", "quadrangle")),
    "soddy": (_suite_soddy, ("touch",)),
    "wallace-sweep": (_suite_wallace_sweep, ("wallace", "kernel")),
    "deltoid": (_suite_deltoid, ("wallace",)),
    "droz-farny": (_suite_droz_farny, ("drozfarny", "kernel")),
    "malfatti": (_suite_malfatti, ("malfatti",)),
    "morley": (_suite_morley, ("morley",)),
    "lighthouse": (_suite_lighthouse, ("morley",)),
    "thrice-sixteen": (_suite_thrice_sixteen, ("morley",)),
    "hexaflex": (_suite_hexaflex, ("touch",)),
    "rendering": (_suite_rendering, ("cli_figures",)),
}


def run_suite(
    name: str, field: str = "exact", eps: float = 1e-9, seed: int = 0,
    count: int = 100,
) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}")
    runner, _ = SUITES[name]
    rng = random.Random(seed)
    return runner(field, eps, rng, count)
