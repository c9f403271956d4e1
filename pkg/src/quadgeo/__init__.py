"""quadgeo — exact computational geometry for orthocentric-quadrangle
triangle configurations, with a verification CLI and SVG figure renderer."""

__version__ = "0.1.0"
