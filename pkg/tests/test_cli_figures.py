"""Scenes, SVG rendering (golden files), tables, suite runner, CLI."""

import pathlib

import pytest
from click.testing import CliRunner

from quadgeo.cli import main
from quadgeo.cli_figures import (
    RECIPES,
    SUITES,
    Scene,
    UnknownFixture,
    UnknownRecipe,
    UnknownSuite,
    build_scene,
    fixture_quadrangle,
    render_svg,
    run_suite,
    table_text,
)
from quadgeo.kernel import Circle, Point

GOLDEN = pathlib.Path(__file__).parent / "golden"
GOLDEN_RECIPES = (
    "twins",
    "touch32",
    "gergonne16",
    "trisequence",
    "star-of-david",
    "droz-farny-envelope",
)


class TestScene:
    def test_empty_recipe(self):
        scene = build_scene("t0", "empty")
        assert scene.elements == []
        svg = render_svg(scene).decode()
        assert "viewBox" in svg
        assert "<line" not in svg and "circle" not in svg

    def test_empty_window_rejected(self):
        with pytest.raises(Exception):
            Scene((0.0, 0.0, 0.0, 1.0))

    def test_unit_circle(self):
        scene = Scene((-2.0, -2.0, 2.0, 2.0))
        scene.add_circle(Circle(Point(0.0, 0.0), 1.0))
        svg = render_svg(scene).decode()
        assert svg.count("<circle") == 1
        assert 'r="1.000000"' in svg
        assert 'viewBox="-2.000000 -2.000000 4.000000 4.000000"' in svg

    def test_unknown_fixture(self):
        with pytest.raises(UnknownFixture):
            build_scene("t1", "twins")

    def test_unknown_recipe(self):
        with pytest.raises(UnknownRecipe):
            build_scene("t0", "nonexistent")

    def test_touch32_contents(self):
        scene = build_scene("t0", "touch32")
        kinds = [e.kind for e in scene.elements]
        assert kinds.count("line") == 12
        assert kinds.count("circle") == 33  # 32 touch circles + Central

    def test_twins_contents(self):
        scene = build_scene("t0", "twins")
        labels = [e.data[2] for e in scene.elements if e.kind == "label"]
        assert len([l for l in labels if l in "1247"]) == 4
        assert len(labels) == 15  # 8 vertices + 6 midpoints + centre

    def test_lines_clipped_to_window(self):
        for recipe in GOLDEN_RECIPES:
            scene = build_scene("t0", recipe)
            x0, y0, x1, y1 = scene.window
            for e in scene.elements:
                if e.kind == "line":
                    ax, ay, bx, by = e.data
                    for x, y in ((ax, ay), (bx, by)):
                        assert x0 - 1e-6 <= x <= x1 + 1e-6
                        assert y0 - 1e-6 <= y <= y1 + 1e-6


class TestGolden:
    @pytest.mark.parametrize("recipe", GOLDEN_RECIPES)
    def test_byte_equality(self, recipe):
        got = render_svg(build_scene("t0", recipe))
        want = (GOLDEN / f"{recipe}.svg").read_bytes()
        assert got == want

    @pytest.mark.parametrize("recipe", GOLDEN_RECIPES)
    def test_determinism(self, recipe):
        a = render_svg(build_scene("t0", recipe))
        b = render_svg(build_scene("t0", recipe))
        assert a == b

    def test_six_decimal_coordinates(self):
        svg = render_svg(build_scene("t0", "twins")).decode()
        import re

        for m in re.finditer(r'(?:x1|y1|x2|y2|cx|cy|r)="([^"]+)"', svg):
            val = m.group(1)
            if val == "2.5":  # fixed point-marker radius, not a coordinate
                continue
            assert re.fullmatch(r"-?\d+\.\d{6}", val), val

    def test_y_axis_flipped(self):
        # vertex 1 = (36, 103) must render at y = -103 in the symmetric window
        svg = render_svg(build_scene("t0", "twins")).decode()
        assert 'cx="36.000000" cy="-103.000000"' in svg


class TestTables:
    def test_trisequence_table(self):
        text = table_text("trisequence")
        assert "23/7" in text and "1841/887" in text and "17/31" in text

    def test_apocrypha_table(self):
        text = table_text("apocrypha")
        assert "-7/23" in text and "7/601" in text

    def test_guylines_table(self):
        text = table_text("guylines")
        lines = text.strip().splitlines()
        assert len(lines) == 1 + 64 + 16
        assert sum(1 for l in lines if "| nail" in l) == 16
        assert sum(1 for l in lines if "| peg" in l) == 16

    def test_unknown_table(self):
        with pytest.raises(UnknownSuite):
            table_text("nonexistent")


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite("nonexistent")

    def test_feuerbach32(self):
        res = run_suite("feuerbach32")
        assert res.cases == 32
        assert res.exact_passes == 32
        assert res.passed

    def test_trisequence_suite(self):
        res = run_suite("trisequence-table")
        assert res.passed

    def test_result_accounting(self):
        res = run_suite("euler-harmonic")
        assert res.exact_passes + res.approx_passes + len(res.failures) == res.cases

    def test_determinism(self):
        a = run_suite("soddy", seed=3, count=20)
        b = run_suite("soddy", seed=3, count=20)
        assert a == b

    def test_registry_reaches_every_module(self):
        covered = set()
        for _, modules in SUITES.values():
            covered.update(modules)
        assert covered >= {
            "kernel",
            "quadrangle",
            "touch",
            "wallace",
            "morley",
            "malfatti",
            "drozfarny",
            "cli_figures",
        }

    def test_all_suites_pass_smoke(self):
        for name in sorted(SUITES):
            res = run_suite(name, field="approx", count=5)
            assert res.passed, (name, res.failures[:3])


class TestCLI:
    def test_verify_pass(self):
        runner = CliRunner()
        result = runner.invoke(
            main, ["verify", "--suite", "euler-harmonic", "--suite", "hexaflex"]
        )
        assert result.exit_code == 0
        assert "euler-harmonic: PASS" in result.output
        assert "hexaflex: PASS" in result.output

    def test_verify_unknown_suite(self):
        runner = CliRunner()
        result = runner.invoke(main, ["verify", "--suite", "nope"])
        assert result.exit_code == 2

    def test_render(self, tmp_path):
        out = tmp_path / "twins.svg"
        runner = CliRunner()
        result = runner.invoke(
            main, ["render", "--fixture", "t0", "--recipe", "twins", "-o", str(out)]
        )
        assert result.exit_code == 0
        assert out.read_bytes() == (GOLDEN / "twins.svg").read_bytes()

    def test_table(self, tmp_path):
        out = tmp_path / "t.txt"
        runner = CliRunner()
        result = runner.invoke(main, ["table", "--name", "apocrypha", "-o", str(out)])
        assert result.exit_code == 0
        assert "7/601" in out.read_text()


def test_quadrangle_fixture_canonical():
    q = fixture_quadrangle("t0")
    from fractions import Fraction as F

    assert q.center == Point(F(0), F(0))
    assert q.central_circle.r2 == 7225
    assert q.vertex(7) == Point(F(36), F(51))
