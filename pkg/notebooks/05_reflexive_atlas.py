# %% [markdown]
# # All reflexive polygons
#
# Lattice polygons with vertices in `[-3, 3]^2` are grown counterclockwise
# and pruned as soon as a nonzero interior lattice point appears.  The
# survivors are reduced to normal form.

# %%
import tempfile
import time
from collections import Counter

from reflexive_polytopes import build_atlas, enumerate_reflexive_polygons, is_delzant
from reflexive_polytopes.io import write_atlas

start = time.perf_counter()
polygons = enumerate_reflexive_polygons()
print(len(polygons), "classes in", round(time.perf_counter() - start, 1), "s")
print(Counter(len(p.vertices) for p in polygons))

# %%
for i, p in enumerate(polygons):
    print(i, "D" if is_delzant(p) else " ", [tuple(map(int, v)) for v in p.vertices])

# %% [markdown]
# The atlas classifies the five Delzant ones and checks every extension.

# %%
atlas = build_atlas(polygons)
for i, report in atlas.reports.items():
    print(i, len(atlas.polygons[i].vertices), "vertices,", len(report), "classes")
print("total", atlas.total_classes)

# %%
with tempfile.TemporaryDirectory() as out:
    summary = write_atlas(atlas, out)
    print({k: summary[k] for k in ("reflexive_polygons", "delzant_polygons", "total_classes")})
