# %% [markdown]
# # Reflexive and Delzant
#
# A lattice polygon is reflexive when each facet sits at lattice distance one
# from the origin.  It is Delzant when the primitive edge vectors at each
# vertex form a lattice basis.  For Delzant polytopes, reflexivity is the
# same as the weight sum rule `v = -(sum of edge weights at v)`.

# %%
from reflexive_polytopes import is_delzant, is_reflexive, named_polytope, normal_form, weight_sum_holds
from reflexive_polytopes.lattice import edge_out_of_facet, vertex_weights
from reflexive_polytopes.polytope import transform, translate

for name in ("square", "triangle", "hexagon", "dual-triangle"):
    p = named_polytope(name)
    print(f"{name:14s} reflexive={is_reflexive(p)!s:5s} delzant={is_delzant(p)}")

# %% [markdown]
# Weights at a vertex, and the weight sum rule failing after a shift.

# %%
square = named_polytope("square")
print(vertex_weights(square, (1, 1)).weights)
print(weight_sum_holds(square), weight_sum_holds(translate(square, (1, 0))))

# %% [markdown]
# The unique edge leaving a facet at a vertex pairs to 1 with the facet
# normal, and its length is an integer.

# %%
triangle = named_polytope("triangle")
facet = next(i for i, h in enumerate(triangle.halfspaces) if h.normal == (0, 1))
print(edge_out_of_facet(triangle, facet, (-1, -1)))

# %% [markdown]
# Normal forms identify polygons up to `GL(2, Z)`.  The witness matrix maps
# the input onto the canonical vertex list.

# %%
sheared = transform(square, [[1, 1], [0, 1]])
nf = normal_form(sheared)
print([tuple(map(int, v)) for v in sheared.vertices])
print(nf.canonical_vertices, nf.witness)
assert nf == normal_form(square)
