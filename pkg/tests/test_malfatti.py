"""Quarter-angle algebra, the 32-solution group, radpoint/guyline
incidences, and the Malfatti circle construction."""

import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadgeo.kernel import Barycentric, DegenerateInput, Point
from quadgeo.malfatti import (
    GuyLine,
    IdentityViolated,
    PoleEncountered,
    SHAPES,
    WrongParity,
    all_oddpoints,
    all_radpoints,
    complete_state,
    extravert,
    gergonne_points,
    group_audit,
    guylines,
    label_audit,
    malfatti_circles,
    nagel_points,
    oddpoint,
    orbit,
    pegs,
    point_coords,
    quarter_angles,
    radcoord,
    radpoint,
    radpoint_of_solution,
    solution_digit_map,
    solution_states,
    validate,
    variant_contact_circle,
    verify_malfatti,
    vertical_guyline_equation,
    zero_point_collinearities,
    zero_points,
)

STATE = (F(2, 9), F(1, 4), F(1, 3))


def random_state(rng):
    while True:
        v = F(rng.randint(1, 30), rng.randint(31, 90))
        w = F(rng.randint(1, 30), rng.randint(31, 90))
        try:
            s = complete_state(v, w)
        except PoleEncountered:
            continue
        if 0 not in s and all(abs(t) != 1 for t in s):
            return s


class TestQuarterAngles:
    def test_closure_identity(self):
        assert validate(*STATE)
        assert not validate(F(1, 2), F(1, 4), F(1, 3))

    def test_complete_state(self):
        assert complete_state(F(1, 4), F(1, 3)) == STATE

    def test_invalid_state_rejected(self):
        from quadgeo.malfatti import IdentityViolated, assert_valid

        with pytest.raises(IdentityViolated):
            assert_valid((F(1, 2), F(1, 4), F(1, 3)))
        with pytest.raises(IdentityViolated):
            solution_states((F(1, 2), F(1, 4), F(1, 3)))

    def test_complete_state_pole(self):
        with pytest.raises(PoleEncountered):
            complete_state(F(3), F(2))

    def test_triangle_quarter_angles_validate(self):
        u, v, w = quarter_angles(Point(0, 0), Point(4, 0), Point(1, 3))
        lhs = 1 + u * v * w
        rhs = u + v + w + v * w + w * u + u * v
        assert abs(lhs - rhs) < 1e-12

    def test_degenerate_triangle(self):
        with pytest.raises(DegenerateInput):
            quarter_angles(Point(0, 0), Point(1, 1), Point(2, 2))

    def test_random_states_validate(self):
        rng = random.Random(5)
        for _ in range(50):
            assert validate(*random_state(rng))


class TestExtraversion:
    def test_a_flip_example(self):
        assert extravert(STATE, "A") == (F(-2, 9), F(3, 5), F(1, 2))

    def test_flips_are_involutions(self):
        for f in "ABC":
            assert extravert(extravert(STATE, f), f) == STATE

    def test_flips_preserve_closure(self):
        for f in "ABC":
            assert validate(*extravert(STATE, f))

    def test_pole(self):
        with pytest.raises(PoleEncountered):
            extravert((F(-1), F(1, 4), F(1, 3)), "B")

    def test_orbit_size(self):
        assert len(orbit(STATE)) == 32

    def test_solution_states_distinct_and_valid(self):
        sols = solution_states(STATE)
        assert len(sols) == 32
        assert len(set(sols.values())) == 32
        for s in sols.values():
            assert validate(*s)
        assert set(sols.values()) == set(orbit(STATE))

    def test_random_orbits(self):
        rng = random.Random(11)
        for _ in range(10):
            assert len(orbit(random_state(rng))) == 32


class TestGroupAudit:
    def test_generic(self):
        rep = group_audit(STATE)
        assert rep.order == 32
        assert rep.relations_hold
        assert rep.abc_equals_cba
        assert rep.centre == ("0", "3", "5", "6")
        assert rep.involutions == 19
        assert set(rep.order_four) == {
            d + s for d in "1247" for s in "abc"
        }

    def test_random_states(self):
        rng = random.Random(3)
        for _ in range(5):
            rep = group_audit(random_state(rng))
            assert rep.order == 32 and rep.relations_hold


class TestRadpoints:
    def test_fundamental_radpoint(self):
        p = radpoint((0, 0, 0), STATE)
        assert p.same_point(Barycentric(F(154, 765), F(15, 68), F(4, 15)))

    def test_parity_enforced(self):
        with pytest.raises(WrongParity):
            radpoint((0, 0, 1), STATE)
        with pytest.raises(WrongParity):
            oddpoint((0, 0, 0), STATE)

    def test_counts(self):
        rads = all_radpoints(STATE)
        odds = all_oddpoints(STATE)
        assert len(rads) == 32 and len(odds) == 32
        assert sum(1 for lab in odds if sum(lab) % 4 == 1) == 16
        assert sum(1 for lab in odds if sum(lab) % 4 == 3) == 16

    def test_all_projectively_distinct(self):
        pts = list(all_radpoints(STATE).values()) + list(
            all_oddpoints(STATE).values()
        )
        for i, p in enumerate(pts):
            for q in pts[i + 1:]:
                assert not p.same_point(q)

    def test_solution_seven_shape(self):
        u, v, w = STATE
        p = radpoint_of_solution("7", STATE)
        assert p.same_point(
            Barycentric(SHAPES["R"](u), SHAPES["R"](v), SHAPES["R"](w))
        )

    def test_solution_digit_bijection(self):
        dm = solution_digit_map(STATE)
        assert len(dm) == 32
        assert len(set(dm.values())) == 32
        assert dm["0"] == (0, 0, 0)
        assert dm["7"] == (2, 2, 2)
        for lab, ijk in dm.items():
            assert sum(ijk) % 2 == 0

    def test_shape_sign_pairs(self):
        u, _, _ = STATE
        for big, small in (("I", "i"), ("R", "r"), ("S", "s"), ("T", "t")):
            assert SHAPES[big](u) == -SHAPES[small](u)


class TestNagelGergonne:
    def test_nagel_sum_identity(self):
        # componentwise (1-t²)/t = h(t) + h(-1/t): N_o = <000> + <222>
        n = nagel_points(STATE)["o"]
        p, q = point_coords((0, 0, 0), STATE), point_coords((2, 2, 2), STATE)
        assert (n.x, n.y, n.z) == (p.x + q.x, p.y + q.y, p.z + q.z)

    def test_gergonne_on_pegs(self):
        # every peG assertion passes during construction
        assert len(pegs(STATE)) == 16

    def test_counts(self):
        assert set(nagel_points(STATE)) == {"o", "a", "b", "c"}
        assert set(gergonne_points(STATE)) == {"o", "a", "b", "c"}


class TestGuylines:
    def test_counts(self):
        gl = guylines(STATE)
        assert len(gl) == 64
        assert sum(1 for g in gl if g.kind == "vertical") == 48
        assert sum(1 for g in gl if g.kind == "nail") == 16

    def test_vertical_membership_parity(self):
        for g in guylines(STATE):
            if g.kind != "vertical":
                continue
            rads = [m for m in g.members if sum(m) % 2 == 0]
            odds = [m for m in g.members if sum(m) % 2 == 1]
            assert len(rads) == 2 and len(odds) == 2

    def test_concurrence_at_corner_radpoint(self):
        # [*33], [3*3] and [33*] all contain <233>... no: they meet at <333>
        gl = {g.label: g for g in guylines(STATE) if g.kind == "vertical"}
        p = point_coords((3, 3, 3), STATE)
        for lab in ("[*33]", "[3*3]", "[33*]"):
            line = gl[lab].line
            assert line[0] * p.x + line[1] * p.y + line[2] * p.z == 0

    def test_seventeen_fifty(self):
        sols = solution_states(STATE)
        for lab in ("3b", "2b"):
            s = sols[lab]
            p = Barycentric(radcoord(s[0]), radcoord(s[1]), radcoord(s[2]))
            assert vertical_guyline_equation("A", p, STATE) == (0, 17, 50)

    def test_random_states(self):
        rng = random.Random(17)
        for _ in range(50):
            s = random_state(rng)
            try:
                assert len(guylines(s)) == 64
                assert len(pegs(s)) == 16
            except PoleEncountered:
                continue


class TestLabelAudit:
    def test_boxes(self):
        rep = label_audit(STATE)
        assert rep.lines_checked == 64
        assert rep.nim_sum_boxes_ok
        assert rep.digit_map_size == 32

    def test_example_536(self):
        rep = label_audit(STATE)
        assert rep.example_536 == ("536", "6a", "7a")


class TestZeroPoints:
    def test_sixteen_points(self):
        pts = zero_points(STATE)
        assert len(pts) == 16
        vals = list(pts.values())
        for i, p in enumerate(vals):
            for q in vals[i + 1:]:
                assert not p.same_point(q)

    def test_all_collinearities(self):
        assert zero_point_collinearities(STATE) == 24

    def test_random_states(self):
        rng = random.Random(23)
        for _ in range(20):
            s = random_state(rng)
            try:
                assert zero_point_collinearities(s) == 24
            except PoleEncountered:
                continue


class TestMalfattiCircles:
    def test_reference_triangle(self):
        tri = (Point(36, 103), Point(-204, -77), Point(132, -77))
        circles, trace = malfatti_circles(*tri)
        assert verify_malfatti(circles, *tri)
        assert variant_contact_circle(circles, trace, *tri)
        assert trace.near_far == "NNN"

    def test_transverse_tangents_concur(self):
        tri = (Point(0, 0), Point(4, 0), Point(1, 3))
        _, trace = malfatti_circles(*tri)
        r = trace.radical_centre
        for line in trace.transverse_tangents:
            assert abs(float(line.evaluate(r))) < 1e-9

    def test_touch_points_on_edges(self):
        tri = (Point(0.0, 0.0), Point(4.0, 0.0), Point(1.0, 3.0))
        from quadgeo.kernel import Line

        _, trace = malfatti_circles(*tri)
        edges = (
            Line.through(tri[1], tri[2]),
            Line.through(tri[2], tri[0]),
            Line.through(tri[0], tri[1]),
        )
        for p, e in zip(trace.touch_points, edges):
            assert abs(float(e.evaluate(p))) < 1e-12

    def test_random_triangles(self):
        rng = random.Random(29)
        for _ in range(40):
            tri = tuple(
                Point(rng.uniform(-10, 10), rng.uniform(-10, 10))
                for _ in range(3)
            )
            if abs(float((tri[1] - tri[0]).cross(tri[2] - tri[0]))) < 1.0:
                continue
            circles, trace = malfatti_circles(*tri)
            assert verify_malfatti(circles, *tri)
            assert variant_contact_circle(circles, trace, *tri)
            assert trace.near_far == "NNN"

    def test_degenerate(self):
        with pytest.raises(DegenerateInput):
            malfatti_circles(Point(0, 0), Point(1, 0), Point(2, 0))


@settings(max_examples=20, deadline=None)
@given(
    vn=st.integers(1, 25),
    vd=st.integers(26, 80),
    wn=st.integers(1, 25),
    wd=st.integers(26, 80),
)
def test_property_closure_and_orbit(vn, vd, wn, wd):
    try:
        s = complete_state(F(vn, vd), F(wn, wd))
    except PoleEncountered:
        return
    if 0 in s or any(abs(t) == 1 for t in s):
        return
    assert validate(*s)
    for f in "ABC":
        t = extravert(s, f)
        assert validate(*t)
        assert extravert(t, f) == s
