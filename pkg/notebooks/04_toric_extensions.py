# %% [markdown]
# # Toric extensions
#
# For each admissible quadruple there is a reflexive Delzant polytope one
# dimension up.  It projects onto the base, and the length of each vertical
# fibre is the DH function.

# %%
from reflexive_polytopes import build_extension, named_polytope, verify_extension
from reflexive_polytopes.classify import AdmissibleQuadruple
from reflexive_polytopes.extension import BlowUpSpec, blow_up, blow_up_face, fiber, height, project
from reflexive_polytopes.polytope import facet_index


def pt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


square = named_polytope("square")
top = facet_index(square, (0, 1))

for s, k in ((0, 0), (-1, 0), (-1, 1), (-1, 2)):
    q = AdmissibleQuadruple(square, top, s, k)
    ext = build_extension(q)
    print((s, k), len(ext.vertices), "vertices,", verify_extension(ext, q))

# %% [markdown]
# Fibres over a few points of the square.

# %%
ext = build_extension(AdmissibleQuadruple(square, top, -1, 2))
assert project(ext) == square
for w in [(0, -1), (0, 0), (0, 1), (1, 1)]:
    print(w, "fibre", pt(fiber(ext, w)), "height", height(ext, w))

# %% [markdown]
# The `k = 1` and `k = 2` cases are blow-ups of the previous stage along a
# codimension-two face.

# %%
stage0 = build_extension(AdmissibleQuadruple(square, top, 0, 0))
stage1 = build_extension(AdmissibleQuadruple(square, top, -1, 1))
q1 = AdmissibleQuadruple(square, top, -1, 1)
print(blow_up(stage0, BlowUpSpec(blow_up_face(q1, stage0), 1)) == stage1)

# %% [markdown]
# Verification reports the points where height and DH disagree.

# %%
cube = named_polytope("cube")
verdict = verify_extension(cube, AdmissibleQuadruple(square, top, -1, 0))
print(verdict)
for w, h, dh in verdict.witnesses[:3]:
    print(pt(w), "height", h, "DH", dh)
