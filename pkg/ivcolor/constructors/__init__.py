from .basic import complete_bipartite_coloring, complete_minimal, hypercube_minimal, widest_even_cycle_coloring, widest_path_coloring
from .builder import ColoringBuilder, Construction
from .cylinders import cylinder_minimal, cylinder_widest, prism_three_coloring
from .grids import grid_widest
from .products import hypercube_widest, product_with_cube, product_with_even_cycle, product_with_path
from .registry import MODES, construct, supported_modes
from .tori import torus_widest

__all__ = [
    "ColoringBuilder",
    "Construction",
    "MODES",
    "complete_bipartite_coloring",
    "complete_minimal",
    "construct",
    "cylinder_minimal",
    "cylinder_widest",
    "grid_widest",
    "hypercube_minimal",
    "hypercube_widest",
    "prism_three_coloring",
    "product_with_cube",
    "product_with_even_cycle",
    "product_with_path",
    "supported_modes",
    "torus_widest",
]
