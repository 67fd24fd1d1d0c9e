# %% [markdown]
# # Admissible data and DH functions
#
# A quadruple `(polytope, facet, s, k)` is admissible when it passes five
# combinatorial conditions.  Each admissible quadruple gives the concave
# function `min(2 - s<w,nu>, 2 - (s+k)<w,nu>)`.  Quadruples with the same
# function are grouped into one class.

# %%
from fractions import Fraction

from reflexive_polytopes import check_admissible, classify, dh_eval, dh_function, enumerate_admissible, named_polytope
from reflexive_polytopes.classify import AdmissibleQuadruple
from reflexive_polytopes.polytope import facet_index

square = named_polytope("square")
hexagon = named_polytope("hexagon")
top = facet_index(square, (0, 1))

print(check_admissible(square, top, -1, 2))
print(check_admissible(hexagon, 0, -1, 1))

# %% [markdown]
# The hexagon has vertices on the hyperplane through the origin parallel to
# every facet, so only `k = 0` survives there.

# %%
for name in ("square", "triangle", "hexagon"):
    p = named_polytope(name)
    print(name, len(enumerate_admissible(p)), "admissible,", len(classify(p)), "classes")

# %% [markdown]
# A tent over the square: the top and bottom facets give the same function
# when `k = 2`, which shows up as a collision in the report.

# %%
tent = dh_function(AdmissibleQuadruple(square, top, -1, 2))
for w in [(0, -1), (0, 0), (1, 1), (0, "1/2")]:
    w = tuple(Fraction(x) for x in w)
    print(tuple(map(str, w)), dh_eval(tent, w))

# %%
for c in classify(square).classes:
    print(c.s, c.k, c.nu, "m =", c.m, "fixed points =", c.isolated_fixed_points,
          "facets", [q.facet for q in c.realizing_quadruples], "collision" if c.collides else "")
