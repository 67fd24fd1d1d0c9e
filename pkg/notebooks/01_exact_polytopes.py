# %% [markdown]
# # Polytopes with exact coordinates
#
# Every coordinate is a `Fraction` or an `int`, never a float.  A polytope
# can be built from points or from halfspaces `<nu, w> >= c`, and both
# routes end in the same canonical object.

# %%
from fractions import Fraction

from reflexive_polytopes import HalfSpace, from_halfspaces, from_vertices
from reflexive_polytopes.polytope import contains, edges, lattice_points


def pt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


square = from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0)])
square

# %% [markdown]
# Interior points are dropped.  The halfspaces come out with primitive
# normals, sorted.

# %%
for h in square.halfspaces:
    print(h.normal, ">=", h.c)

# %%
again = from_halfspaces(square.halfspaces)
assert again == square

# %% [markdown]
# Rational input is fine, and the answer stays exact.

# %%
kite = from_vertices([(Fraction(1, 2), 0), (0, 1), (-1, 0), (0, Fraction(-2, 3))])
print([pt(v) for v in kite.vertices])
print([f"{h.normal} >= {h.c}" for h in kite.halfspaces])
print(contains(kite, (Fraction(1, 4), Fraction(1, 3))))

# %% [markdown]
# Edges carry a primitive lattice direction and a length along it.

# %%
for e in edges(square):
    print(pt(e.vertex), "->", pt(e.end), "direction", e.direction, "length", e.length)
print(len(lattice_points(square)), "lattice points")
