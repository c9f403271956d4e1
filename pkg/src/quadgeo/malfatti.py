"""Quarter-angle tangent algebra: the 32-solution extraversion group,
radpoints, guylines, Nails, peGs, oddpoints, and numeric Malfatti circles.

Everything combinatorial lives in the parameters (u, v, w) = tangents of
the quarter-angles, where the whole configuration is exact rational
barycentric algebra.  Triangles enter only through quarter_angles (Approx)
and malfatti_circles (the Steiner construction, Approx).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .kernel import (
    Barycentric,
    Circle,
    DegenerateInput,
    GeometryError,
    Line,
    Point,
    barycentric_collinear,
    foot_of_perpendicular,
    reflect_point_in_line,
)

State = Tuple[Fraction, Fraction, Fraction]


class IdentityViolated(GeometryError):
    pass


class PoleEncountered(GeometryError):
    pass


class WrongParity(GeometryError):
    pass


# ---------------------------------------------------------------------------
# quarter angles and the closure identity
# ---------------------------------------------------------------------------


def validate(u, v, w) -> bool:
    """Closure of A + B + C = π in quarter-angle tangents."""
    return 1 + u * v * w == u + v + w + v * w + w * u + u * v


def assert_valid(state: State) -> State:
    if not validate(*state):
        raise IdentityViolated(f"{state} does not satisfy the closure identity")
    return state


def complete_state(v: Fraction, w: Fraction) -> State:
    """Solve the closure identity (linear in u) given v and w."""
    v, w = Fraction(v), Fraction(w)
    den = v * w - v - w - 1
    if den == 0:
        raise PoleEncountered("closure identity degenerates for this (v, w)")
    u = (v + w + v * w - 1) / den
    return (u, v, w)


def quarter_angles(a: Point, b: Point, c: Point) -> Tuple[float, float, float]:
    """Tangents of the quarter-angles of a triangle (Approx backend)."""

    def angle(p: Point, q: Point, r: Point) -> float:
        d1, d2 = q - p, r - p
        return abs(
            math.atan2(
                float(d1.x) * float(d2.y) - float(d1.y) * float(d2.x),
                float(d1.x) * float(d2.x) + float(d1.y) * float(d2.y),
            )
        )

    if abs(float((b - a).cross(c - a))) == 0:
        raise DegenerateInput("degenerate triangle")
    return (
        math.tan(angle(a, b, c) / 4),
        math.tan(angle(b, c, a) / 4),
        math.tan(angle(c, a, b) / 4),
    )


# ---------------------------------------------------------------------------
# extraversion: flips, the 32 solutions, the group
# ---------------------------------------------------------------------------


def _s_map(t: Fraction) -> Fraction:
    if t == -1:
        raise PoleEncountered("flip map pole at -1")
    return (1 - t) / (1 + t)


def _neg(t: Fraction) -> Fraction:
    return -t


def _rec(t: Fraction) -> Fraction:
    if t == 0:
        raise PoleEncountered("reciprocal of zero")
    return 1 / t


def extravert(state: State, flip: str) -> State:
    """A-flip replaces angles (A, B, C) by (-A, π-B, π-C): in quarter-angle
    tangents (u,v,w) -> (-u, (1-v)/(1+v), (1-w)/(1+w)); B, C cyclically."""
    u, v, w = state
    if flip == "A":
        return (_neg(u), _s_map(v), _s_map(w))
    if flip == "B":
        return (_s_map(u), _neg(v), _s_map(w))
    if flip == "C":
        return (_s_map(u), _s_map(v), _neg(w))
    raise ValueError(f"unknown flip {flip!r}")


_ORDINARY: Dict[str, Tuple[Callable, Callable, Callable]] = {
    "0": (lambda t: t, lambda t: t, lambda t: t),
    "3": (lambda t: t, lambda t: -_rec(t), lambda t: -_rec(t)),
    "5": (lambda t: -_rec(t), lambda t: t, lambda t: -_rec(t)),
    "6": (lambda t: -_rec(t), lambda t: -_rec(t), lambda t: t),
    "7": (_rec, _rec, _rec),
    "4": (_rec, _neg, _neg),
    "2": (_neg, _rec, _neg),
    "1": (_neg, _neg, _rec),
}


def solution_states(state: State) -> Dict[str, State]:
    """The 32 Malfatti solutions: 8 ordinary (labelled 0..7) and 24 flipped
    (suffix a, b, c for an A-, B- or C-flip of the ordinary solution)."""
    assert_valid(state)
    out: Dict[str, State] = {}
    for digit, (fu, fv, fw) in _ORDINARY.items():
        s = (fu(state[0]), fv(state[1]), fw(state[2]))
        out[digit] = s
        for suffix, flip in (("a", "A"), ("b", "B"), ("c", "C")):
            out[digit + suffix] = extravert(s, flip)
    return out


def orbit(state: State) -> List[State]:
    """Closure of a state under the three flips."""
    seen = {state}
    frontier = [state]
    while frontier:
        s = frontier.pop()
        for f in "ABC":
            t = extravert(s, f)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return sorted(seen)


@dataclass(frozen=True)
class GroupAuditReport:
    order: int
    relations_hold: bool
    abc_equals_cba: bool
    centre: Tuple[str, ...]
    involutions: int
    order_four: Tuple[str, ...]


_GENERIC_STATE: State = (Fraction(2, 9), Fraction(1, 4), Fraction(1, 3))


def group_audit(state: State = _GENERIC_STATE) -> GroupAuditReport:
    """The extraversion group as permutations of the 32 solutions:
    A² = B² = C² = (ABC)² = (BC)⁴ = (CA)⁴ = (AB)⁴ = I and ABC = CBA;
    order 32; centre = the evil solutions {0, 3, 5, 6}; 19 involutions."""
    labels = solution_states(state)
    index = {s: lab for lab, s in labels.items()}
    if len(index) != 32:
        raise DegenerateInput("state orbit is degenerate")
    order_list = sorted(labels)

    def perm_of(flip: str) -> Tuple[int, ...]:
        return tuple(
            order_list.index(index[extravert(labels[lab], flip)])
            for lab in order_list
        )

    identity = tuple(range(32))

    def compose(p, q):  # apply q then p
        return tuple(p[q[i]] for i in range(32))

    gens = {f: perm_of(f) for f in "ABC"}
    elements = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for g in gens.values():
            q = compose(g, p)
            if q not in elements:
                elements.add(q)
                frontier.append(q)

    a, b, c = gens["A"], gens["B"], gens["C"]
    abc = compose(a, compose(b, c))
    relations = (
        compose(a, a) == identity
        and compose(b, b) == identity
        and compose(c, c) == identity
        and compose(abc, abc) == identity
    )
    for p, q in ((b, c), (c, a), (a, b)):
        pq = compose(p, q)
        pq4 = compose(pq, compose(pq, pq))
        relations = relations and compose(pq, pq4) == identity
    abc_cba = abc == compose(c, compose(b, a))

    # the regular action identifies elements with solutions: g <-> g applied
    # to solution 0
    base = order_list.index("0")
    centre_labels = tuple(
        sorted(
            order_list[p[base]]
            for p in elements
            if all(compose(p, g) == compose(g, p) for g in gens.values())
        )
    )
    involutions = sum(
        1 for p in elements if p != identity and compose(p, p) == identity
    )
    order4 = tuple(
        sorted(
            order_list[p[base]]
            for p in elements
            if compose(p, p) != identity
            and compose(compose(p, p), compose(p, p)) == identity
        )
    )
    return GroupAuditReport(
        len(elements), relations, abc_cba, centre_labels, involutions, order4
    )


# ---------------------------------------------------------------------------
# radpoints and oddpoints: the <ijk> digit algebra
# ---------------------------------------------------------------------------


def _g(d: int, t: Fraction) -> Fraction:
    """Digit transforms of a quarter-angle tangent under extraversion:
    angle θ -> θ + dπ."""
    if d % 4 == 0:
        return t
    if d % 4 == 1:
        if t == 1:
            raise PoleEncountered("digit transform pole at 1")
        return (1 + t) / (1 - t)
    if d % 4 == 2:
        return -_rec(t)
    if t == -1:
        raise PoleEncountered("digit transform pole at -1")
    return (t - 1) / (t + 1)


def radcoord(t: Fraction) -> Fraction:
    """Barycentric component tan(θ/4)·cos(θ/2) = t(1-t²)/(1+t²)."""
    return t * (1 - t * t) / (1 + t * t)


def zerocoord(t: Fraction) -> Fraction:
    """Barycentric component of the 0-point family: t/(1+t²)."""
    return t / (1 + t * t)


# shape functions I, R, S, T and their negatives (Table of radcoords)
SHAPES: Dict[str, Callable[[Fraction], Fraction]] = {
    "I": lambda x: radcoord(x),
    "i": lambda x: -radcoord(x),
    "R": lambda x: -radcoord(-_rec(x)),
    "r": lambda x: radcoord(-_rec(x)),
    "S": lambda x: radcoord(_s_map(x)),
    "s": lambda x: -radcoord(_s_map(x)),
    "T": lambda x: radcoord(_g(1, x)),
    "t": lambda x: -radcoord(_g(1, x)),
}


def point_coords(label: Tuple[int, int, int], state: State) -> Barycentric:
    """Exact barycentrics of ⟨ijk⟩: the extraversion of the fundamental
    radpoint by angle shifts (iπ, jπ, kπ)."""
    i, j, k = (d % 4 for d in label)
    u, v, w = state
    return Barycentric(
        radcoord(_g(i, u)), radcoord(_g(j, v)), radcoord(_g(k, w))
    )


def radpoint(label: Tuple[int, int, int], state: State) -> Barycentric:
    if sum(label) % 2 != 0:
        raise WrongParity(f"{label} is an oddpoint, not a radpoint")
    return point_coords(label, state)


def oddpoint(label: Tuple[int, int, int], state: State) -> Barycentric:
    if sum(label) % 2 == 0:
        raise WrongParity(f"{label} is a radpoint, not an oddpoint")
    return point_coords(label, state)


def all_radpoints(state: State) -> Dict[Tuple[int, int, int], Barycentric]:
    return {
        lab: point_coords(lab, state)
        for lab in product(range(4), repeat=3)
        if sum(lab) % 2 == 0
    }


def all_oddpoints(state: State) -> Dict[Tuple[int, int, int], Barycentric]:
    """16 one-points (digit sum ≡ 1 mod 4) and 16 three-points (≡ 3)."""
    return {
        lab: point_coords(lab, state)
        for lab in product(range(4), repeat=3)
        if sum(lab) % 2 == 1
    }


def radpoint_of_solution(label: str, state: State) -> Barycentric:
    """Radical centre of a solution's circle triple: the radcoord transform
    of the solution's own quarter-angle tangents."""
    s = solution_states(state)[label]
    return Barycentric(radcoord(s[0]), radcoord(s[1]), radcoord(s[2]))


def solution_digit_map(state: State = _GENERIC_STATE) -> Dict[str, Tuple[int, int, int]]:
    """Bijection between the 32 solution labels and the 32 ⟨ijk⟩ radpoints."""
    rads = all_radpoints(state)
    out: Dict[str, Tuple[int, int, int]] = {}
    for lab in solution_states(state):
        p = radpoint_of_solution(lab, state)
        matches = [ijk for ijk, q in rads.items() if p.same_point(q)]
        if len(matches) != 1:
            raise DegenerateInput(f"solution {lab} matches {len(matches)} radpoints")
        out[lab] = matches[0]
    return out


# ---------------------------------------------------------------------------
# Nagel and Gergonne points
# ---------------------------------------------------------------------------


def nagel_points(state: State) -> Dict[str, Barycentric]:
    u, v, w = state
    ir = lambda t: (1 - t * t) / (2 * t)        # (I-R)/2 = cot(θ/2)/2
    ts = lambda t: 2 * t / (t * t - 1)           # (T-S)/2 = -2 tan(θ/2)...
    return {
        "o": Barycentric(2 * ir(u), 2 * ir(v), 2 * ir(w)),
        "a": Barycentric(ir(u), ts(v), ts(w)),
        "b": Barycentric(ts(u), ir(v), ts(w)),
        "c": Barycentric(ts(u), ts(v), ir(w)),
    }


def gergonne_points(state: State) -> Dict[str, Barycentric]:
    u, v, w = state
    tn = lambda t: t / (1 - t * t)               # tan(θ/2)/2
    ct = lambda t: (t * t - 1) / (2 * t)         # -cot(θ/2)/2
    return {
        "o": Barycentric(tn(u), tn(v), tn(w)),
        "a": Barycentric(2 * tn(u), ct(v), ct(w)),
        "b": Barycentric(ct(u), 2 * tn(v), ct(w)),
        "c": Barycentric(ct(u), ct(v), 2 * tn(w)),
    }


# ---------------------------------------------------------------------------
# guylines, Nails, peGs
# ---------------------------------------------------------------------------

_VERTICES = {
    "A": Barycentric(1, 0, 0),
    "B": Barycentric(0, 1, 0),
    "C": Barycentric(0, 0, 1),
}


def _join(p: Barycentric, q: Barycentric) -> Tuple[Fraction, Fraction, Fraction]:
    coeffs = (
        p.y * q.z - p.z * q.y,
        p.z * q.x - p.x * q.z,
        p.x * q.y - p.y * q.x,
    )
    if all(c == 0 for c in coeffs):
        raise DegenerateInput("join of identical points")
    return coeffs


def _on(line: Sequence[Fraction], p: Barycentric) -> bool:
    return line[0] * p.x + line[1] * p.y + line[2] * p.z == 0


@dataclass(frozen=True)
class GuyLine:
    kind: str                      # "vertical", "nail", or "peg"
    through: str                   # "A"/"B"/"C" or Nagel/Gergonne suffix
    label: str                     # [*jk] style, or evil-digit line label
    line: Tuple[Fraction, Fraction, Fraction]
    members: Tuple[Tuple[int, int, int], ...]


def _nagel_suffix(onepoint: Tuple[int, int, int]) -> str:
    """Hexagon ⟨ijk⟩ (digit sum ≡ 1): all digits odd -> N_o; otherwise the
    single odd digit's position names the Nagel point."""
    odd_positions = [p for p, d in enumerate(onepoint) if d % 2 == 1]
    if len(odd_positions) == 3:
        return "o"
    return "abc"[odd_positions[0]]


def guylines(state: State) -> List[GuyLine]:
    """48 vertical guylines [*jk], [i*k], [ij*] (each through one vertex,
    two radpoints and two oddpoints) and 16 Nails through Nagel points."""
    out: List[GuyLine] = []
    for pos, vertex in enumerate("ABC"):
        for rest in product(range(4), repeat=2):
            members = []
            for d in range(4):
                lab = list(rest)
                lab.insert(pos, d)
                members.append(tuple(lab))
            pts = [point_coords(m, state) for m in members]
            line = _join(pts[0], pts[1])
            for p in pts[2:] + [_VERTICES[vertex]]:
                assert _on(line, p), f"guyline through {vertex} fails"
            text = "".join(
                "*" if i == pos else str(rest[i if i < pos else i - 1])
                for i in range(3)
            )
            out.append(GuyLine("vertical", vertex, f"[{text}]", line, tuple(members)))
    nagels = nagel_points(state)
    for lab in product(range(4), repeat=3):
        if sum(lab) % 4 != 1:
            continue
        plus = tuple((d + 1) % 4 for d in lab)
        minus = tuple((d - 1) % 4 for d in lab)
        p1, p2 = point_coords(plus, state), point_coords(minus, state)
        line = _join(p1, p2)
        suffix = _nagel_suffix(lab)
        assert _on(line, nagels[suffix]), f"Nail {lab} misses N_{suffix}"
        out.append(
            GuyLine(
                "nail",
                suffix,
                "[" + "".join(map(str, lab)) + suffix + "]",
                line,
                (plus, minus),
            )
        )
    return out


def pegs(state: State) -> List[GuyLine]:
    """16 peGs: each joins a 1-point to its antipodal 3-point and passes
    through a Gergonne point."""
    gergs = gergonne_points(state)
    out: List[GuyLine] = []
    for lab in product(range(4), repeat=3):
        if sum(lab) % 4 != 1:
            continue
        anti = tuple((d + 2) % 4 for d in lab)
        p1, p2 = point_coords(lab, state), point_coords(anti, state)
        line = _join(p1, p2)
        suffix = _nagel_suffix(lab)
        assert _on(line, gergs[suffix]), f"peG {lab} misses G_{suffix}"
        out.append(
            GuyLine(
                "peg",
                suffix,
                "[" + "".join(map(str, anti)) + suffix + "]",
                line,
                (lab, anti),
            )
        )
    return out


def vertical_guyline_equation(
    vertex: str, p: Barycentric, state: State
) -> Tuple[Fraction, Fraction, Fraction]:
    """Join of a vertex and a point, normalized to integer coefficients."""
    line = _join(_VERTICES[vertex], p)
    nums = [c for c in line if c != 0]
    if not nums:
        raise DegenerateInput("vertex coincides with the point")
    den = 1
    for c in nums:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [c * den for c in line]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(int(c)))
    ints = [int(c) // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(Fraction(c) for c in ints)


# ---------------------------------------------------------------------------
# the evil-digit line labels of the vertical guylines and Nails
# ---------------------------------------------------------------------------

_ROW_DIGIT = {"N": 0, "A": 3, "B": 5, "C": 6}
_FLIP_DIGIT = {"o": 0, "a": 3, "b": 5, "c": 6}
_EVIL = (0, 3, 5, 6)


@dataclass(frozen=True)
class LabelAuditReport:
    lines_checked: int
    nim_sum_boxes_ok: bool
    example_536: Tuple[str, str, str]
    digit_map_size: int


def label_audit(state: State = _GENERIC_STATE) -> LabelAuditReport:
    """Audits the evil-digit labelling ``rfq``: line rfq passes through the
    vertex/Nagel point r and the radpoints of solutions q·f and (q⊕σ)·f with
    σ = 7 ⊕ r ⊕ f, checked by exact incidence."""
    sols = solution_states(state)
    nagels = nagel_points(state)
    checked = 0
    ok = True
    example: Tuple[str, str, str] = ("", "", "")

    def coords_of(label: str) -> Barycentric:
        s = sols[label]
        return Barycentric(radcoord(s[0]), radcoord(s[1]), radcoord(s[2]))

    for row, r in _ROW_DIGIT.items():
        for flip, f in _FLIP_DIGIT.items():
            sigma = 7 ^ r ^ f
            suffix = {0: "", 3: "a", 5: "b", 6: "c"}[f]
            for q in _EVIL:
                lab1 = f"{q}{suffix}"
                lab2 = f"{q ^ sigma}{suffix}"
                p1, p2 = coords_of(lab1), coords_of(lab2)
                line = _join(p1, p2)
                through = (
                    nagels[flip] if row == "N" else _VERTICES[row]
                )
                if not _on(line, through):
                    ok = False
                checked += 1
                if row == "B" and f == 3 and q == 6:
                    example = ("536", lab1, lab2)
    return LabelAuditReport(checked, ok, example, len(solution_digit_map(state)))


# ---------------------------------------------------------------------------
# the sixteen 0-points and their 24 collinearities
# ---------------------------------------------------------------------------

ZERO_POINT_LABELS = (
    "000", "022", "202", "220",
    "233", "211", "031", "013",
    "323", "301", "121", "103",
    "332", "310", "130", "112",
)

# rows of the stated collinearity table: vertex + two 0-points each
ZERO_COLLINEARITIES = (
    ("A", "000", "022"), ("B", "000", "202"), ("C", "000", "220"),
    ("A", "220", "202"), ("B", "022", "220"), ("C", "022", "202"),
    ("A", "233", "211"), ("B", "233", "031"), ("C", "233", "013"),
    ("A", "031", "013"), ("B", "211", "013"), ("C", "031", "211"),
    ("A", "323", "301"), ("B", "323", "121"), ("C", "323", "103"),
    ("A", "121", "103"), ("B", "301", "103"), ("C", "121", "301"),
    ("A", "332", "310"), ("B", "332", "130"), ("C", "332", "112"),
    ("A", "130", "112"), ("B", "310", "112"), ("C", "130", "310"),
)


def zero_points(state: State) -> Dict[str, Barycentric]:
    """The sixteen points ⟨u/(1+u²), v/(1+v²), w/(1+w²)⟩ and their digit
    extraversions (digits 0 and 2, or 1 and 3, differ only in sign)."""
    u, v, w = state
    out: Dict[str, Barycentric] = {}
    for text in ZERO_POINT_LABELS:
        i, j, k = (int(ch) for ch in text)
        out[text] = Barycentric(
            zerocoord(_g(i, u)), zerocoord(_g(j, v)), zerocoord(_g(k, w))
        )
    return out


def zero_point_collinearities(state: State) -> int:
    """Number of the 24 stated vertex collinearities that hold exactly."""
    pts = zero_points(state)
    count = 0
    for vertex, l1, l2 in ZERO_COLLINEARITIES:
        if barycentric_collinear(_VERTICES[vertex], pts[l1], pts[l2]):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Malfatti circles by the Steiner construction (Approx)
# ---------------------------------------------------------------------------


@dataclass
class MalfattiTrace:
    incentre: Point
    sub_incircles: Tuple[Circle, Circle, Circle]   # of BIC, CIA, AIB
    touch_points: Tuple[Point, Point, Point]       # X, Y, Z on BC, CA, AB
    transverse_tangents: Tuple[Line, Line, Line]   # XX', YY', ZZ'
    radical_centre: Point
    near_far: str


def _incircle_of(p: Point, q: Point, r: Point) -> Circle:
    a = math.hypot(float(q.x - r.x), float(q.y - r.y))
    b = math.hypot(float(r.x - p.x), float(r.y - p.y))
    c = math.hypot(float(p.x - q.x), float(p.y - q.y))
    s = a + b + c
    cx = (a * float(p.x) + b * float(q.x) + c * float(r.x)) / s
    cy = (a * float(p.y) + b * float(q.y) + c * float(r.y)) / s
    area = abs(float((q - p).cross(r - p))) / 2
    rad = 2 * area / s
    return Circle(Point(cx, cy), rad * rad)


def _corner_circle(
    vertex: Point, e1: Point, e2: Point, tangent: Line
) -> Circle:
    """Circle tangent to both edges at a vertex and to a transverse tangent
    line, on the vertex side of that line."""
    l1 = Line.through(vertex, e1)
    l2 = Line.through(vertex, e2)
    bis_dir = _bisector_direction(vertex, e1, e2)
    sin_half = abs(float(l1.evaluate(Point(vertex.x + bis_dir.x, vertex.y + bis_dir.y))))
    e0 = float(tangent.evaluate(vertex))
    side = 1.0 if e0 > 0 else -1.0
    step = float(tangent.a * bis_dir.x + tangent.b * bis_dir.y)
    # |e0 + d·step| = d·sin_half, centre between vertex and tangent: the
    # signed distance e0 + d·step keeps the vertex's sign, so
    # side·(e0 + d·step) = d·sin_half
    cands = []
    for sgn in (1.0, -1.0):
        denom = sgn * sin_half - side * step
        if abs(denom) > 1e-15:
            dd = side * e0 / denom
            if dd > 1e-12:
                cands.append(dd)
    if not cands:
        raise DegenerateInput("no corner circle")
    dd = min(cands)
    centre = Point(vertex.x + dd * bis_dir.x, vertex.y + dd * bis_dir.y)
    rad = dd * sin_half
    return Circle(centre, rad * rad)


def _bisector_direction(vertex: Point, e1: Point, e2: Point) -> Point:
    d1, d2 = e1 - vertex, e2 - vertex
    n1 = math.hypot(float(d1.x), float(d1.y))
    n2 = math.hypot(float(d2.x), float(d2.y))
    bx = float(d1.x) / n1 + float(d2.x) / n2
    by = float(d1.y) / n1 + float(d2.y) / n2
    n = math.hypot(bx, by)
    return Point(bx / n, by / n)


def malfatti_circles(
    a: Point, b: Point, c: Point, eps: float = 1e-9
) -> Tuple[Tuple[Circle, Circle, Circle], MalfattiTrace]:
    """Steiner's construction: incircles of BIC, CIA, AIB; their touch
    points X, Y, Z on the edges; the transverse tangents XX', YY', ZZ'
    (reflections of AI, BI, CI in the joins of the sub-incentres) concur at
    the radical centre; the Malfatti circles are the incircles of the
    corner quadrilaterals."""
    a, b, c = (Point(float(p.x), float(p.y)) for p in (a, b, c))
    if abs(float((b - a).cross(c - a))) < eps:
        raise DegenerateInput("degenerate triangle")
    inc = _incircle_of(a, b, c)
    i = inc.center
    sub = (
        _incircle_of(b, i, c),
        _incircle_of(c, i, a),
        _incircle_of(a, i, b),
    )
    edges = (Line.through(b, c), Line.through(c, a), Line.through(a, b))
    touch = tuple(
        foot_of_perpendicular(s.center, e) for s, e in zip(sub, edges)
    )
    joins = (
        Line.through(sub[1].center, sub[2].center),   # B0 C0
        Line.through(sub[2].center, sub[0].center),   # C0 A0
        Line.through(sub[0].center, sub[1].center),   # A0 B0
    )
    bisectors = (Line.through(a, i), Line.through(b, i), Line.through(c, i))
    tangents = tuple(
        _reflect_line_in(mirror, bis) for bis, mirror in zip(bisectors, joins)
    )
    r_centre = tangents[0].intersect(tangents[1])
    scale = max(abs(float(v)) for p in (a, b, c) for v in (p.x, p.y))
    assert abs(float(tangents[2].evaluate(r_centre))) < 1e-6 * max(1.0, scale), (
        "transverse tangents fail to concur"
    )
    circles = (
        _corner_circle(a, b, c, tangents[1]),   # tangent to AB, AC, YY'
        _corner_circle(b, c, a, tangents[2]),
        _corner_circle(c, a, b, tangents[0]),
    )
    near_far = _near_far(circles, (a, b, c))
    trace = MalfattiTrace(i, sub, touch, tangents, r_centre, near_far)
    return circles, trace


def _reflect_line_in(mirror: Line, line: Line) -> Line:
    p = foot_of_perpendicular(Point(0.0, 0.0), line)
    d = line.direction()
    q = Point(p.x + d.x, p.y + d.y)
    return Line.through(
        reflect_point_in_line(p, mirror), reflect_point_in_line(q, mirror)
    )


def _near_far(circles: Sequence[Circle], verts: Sequence[Point]) -> str:
    """N if a circle's edge contacts are nearer its vertex than the other
    circles' contacts on the same edges."""
    out = []
    for idx in range(3):
        v = verts[idx]
        near = True
        for other in range(3):
            if other == idx:
                continue
            edge = Line.through(v, verts[other])
            mine = foot_of_perpendicular(circles[idx].center, edge)
            theirs = foot_of_perpendicular(circles[other].center, edge)
            d_mine = math.hypot(float(mine.x - v.x), float(mine.y - v.y))
            d_theirs = math.hypot(float(theirs.x - v.x), float(theirs.y - v.y))
            if d_mine > d_theirs:
                near = False
        out.append("N" if near else "F")
    return "".join(out)


def verify_malfatti(
    circles: Sequence[Circle], a: Point, b: Point, c: Point, eps: float = 1e-7
) -> bool:
    """Mutual tangency and double edge tangency."""
    a, b, c = (Point(float(p.x), float(p.y)) for p in (a, b, c))
    scale = max(abs(float(v)) for p in (a, b, c) for v in (p.x, p.y))
    tol = eps * max(1.0, scale)
    edges = {
        0: (Line.through(a, b), Line.through(a, c)),
        1: (Line.through(b, c), Line.through(b, a)),
        2: (Line.through(c, a), Line.through(c, b)),
    }
    for i in range(3):
        ri = math.sqrt(float(circles[i].r2))
        for e in edges[i]:
            if abs(abs(float(e.evaluate(circles[i].center))) - ri) > tol:
                return False
        for j in range(i + 1, 3):
            rj = math.sqrt(float(circles[j].r2))
            d = math.hypot(
                float(circles[i].center.x - circles[j].center.x),
                float(circles[i].center.y - circles[j].center.y),
            )
            if abs(d - (ri + rj)) > tol:
                return False
    return True


def variant_contact_circle(
    circles: Sequence[Circle],
    trace: MalfattiTrace,
    a: Point,
    b: Point,
    c: Point,
    eps: float = 1e-6,
) -> bool:
    """The circle centred at X (sub-incircle contact on BC) with radius
    r(1+u)/2 passes through the contacts of the B- and C-Malfatti circles
    with BC and with each other (cyclically for Y, Z)."""
    u, v, w = quarter_angles(a, b, c)
    r = math.sqrt(float(_incircle_of(a, b, c).r2))
    scale = max(abs(float(t)) for p in (a, b, c) for t in (p.x, p.y))
    data = (
        (trace.touch_points[0], u, 1, 2, Line.through(b, c)),
        (trace.touch_points[1], v, 2, 0, Line.through(c, a)),
        (trace.touch_points[2], w, 0, 1, Line.through(a, b)),
    )
    for centre, t, i, j, edge in data:
        rad = r * (1 + t) / 2
        contacts = [
            foot_of_perpendicular(circles[i].center, edge),
            foot_of_perpendicular(circles[j].center, edge),
        ]
        ri = math.sqrt(float(circles[i].r2))
        rj = math.sqrt(float(circles[j].r2))
        d = Point(
            circles[j].center.x - circles[i].center.x,
            circles[j].center.y - circles[i].center.y,
        )
        dn = math.hypot(float(d.x), float(d.y))
        contacts.append(
            Point(
                circles[i].center.x + float(d.x) * ri / dn,
                circles[i].center.y + float(d.y) * ri / dn,
            )
        )
        for p in contacts:
            got = math.hypot(float(p.x - centre.x), float(p.y - centre.y))
            if abs(got - rad) > eps * max(1.0, scale):
                return False
    return True
