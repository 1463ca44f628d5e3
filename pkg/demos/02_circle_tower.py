"""
Approximating a circle, stage by stage
======================================

The target is the boundary of a triangle: three vertices, three edges.
Stage 0 drops in three disconnected vertices.  Stage 1 wires them up
with six edges (one per commuting square), producing a graph whose
first homology is Z^4, much bigger than the circle's Z.  Stage 2
attaches 36 two-cells and cuts H_1 back down to exactly Z.
"""

from cwtower import (
    boundary_simplex,
    cw_tower,
    homology,
    induced_homology_map,
)

B = boundary_simplex(2)
tower = cw_tower(B, 2)

for n in range(3):
    print(f"stage {n}: counts {tower.stages[n].counts}")

print()
print("H_1 of B:       ", homology(B, 1))
print("H_1 of stage 1: ", homology(tower.stages[1], 1))
print("H_1 of stage 2: ", homology(tower.stages[2], 1))

# The stage-1 projection is onto in H_1 but far from injective; one
# stage later the induced map is an isomorphism.
h1 = induced_homology_map(tower.projections[1], 1)
h2 = induced_homology_map(tower.projections[2], 1)
print()
print(f"stage 1 projection on H_1: epi={h1.is_epi} iso={h1.is_iso}")
print(f"stage 2 projection on H_1: epi={h2.is_epi} iso={h2.is_iso}")
