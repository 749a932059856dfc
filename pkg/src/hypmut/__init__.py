"""Hyperbolic geometry bounds, cusp packings and pretzel mutation counts for
certifying shared short geodesics among mutant pretzel knots."""

__version__ = "0.1.0"
