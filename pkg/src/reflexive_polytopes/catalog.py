"""Named polytopes used by the command line, tests and notebooks."""
from itertools import product

from .polytope import from_vertices

__all__ = ["named_polytope", "NAMES"]

_VERTICES = {
    "square": [(1, 1), (1, -1), (-1, 1), (-1, -1)],
    "triangle": [(-1, -1), (2, -1), (-1, 2)],
    "hexagon": [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)],
    # P^2 blown up at one point (a trapezoid) and at two points
    "trapezoid": [(-1, -1), (-1, 0), (1, -1), (1, 2)],
    "pentagon": [(-1, -1), (-1, 0), (0, -1), (0, 1), (2, 1)],
    "dual-triangle": [(1, 0), (0, 1), (-1, -1)],
    "cube": list(product((-1, 1), repeat=3)),
}

NAMES = tuple(_VERTICES)


def named_polytope(name):
    try:
        return from_vertices(_VERTICES[name])
    except KeyError:
        raise KeyError(f"unknown polytope {name!r}; known: {', '.join(NAMES)}") from None
