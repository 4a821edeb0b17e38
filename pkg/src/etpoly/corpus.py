"""The lattices used by the acceptance checks and the reproduction scripts."""
from __future__ import annotations

from functools import lru_cache

from .constructions.generators import cross, cube, hypersimplex, prism_over_simplex
from .constructions.stacking import build_cross_stack, build_truncatable_stacked
from .poset import GradedPoset, boolean_lattice


@lru_cache(maxsize=None)
def corpus() -> tuple[tuple[str, GradedPoset], ...]:
    """Sixteen Eulerian lattices: boolean lattices of length 3 to 6, cubes
    and cross polytopes in dimensions 3 to 5, two hypersimplices, the prism
    over a tetrahedron, two stacked 4-polytopes and a stack of two cross
    polytopes."""
    items: list[tuple[str, GradedPoset]] = []
    for n in range(3, 7):
        items.append((f"B{n}", boolean_lattice(n)))
    for d in (3, 4, 5):
        items.append((f"cube{d}", cube(d).lattice))
        items.append((f"cross{d}", cross(d).lattice))
    items.append(("K2_4", hypersimplex(4, 2).lattice))
    items.append(("K2_5", hypersimplex(5, 2).lattice))
    items.append(("prism_simplex3", prism_over_simplex(4).lattice))
    for n in (1, 2):
        items.append((f"stacked4_{n}", build_truncatable_stacked(4, [0] * n).polytope.lattice))
    items.append(("cross_stack_2", build_cross_stack(2).polytope.lattice))
    return tuple(items)
