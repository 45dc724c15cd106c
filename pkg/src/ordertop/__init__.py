"""ordertop: finite poset topology at desk scale.

Posets and their order complexes, exact reduced homology over Z and Z/2,
complement-removal and wedge-decomposition checks, a wedge-of-spheres
calculus, configuration-poset Betti tables, and a numeric eigenvalue flag
map.  See the README for the CLI and file formats.
"""

from ._kernel import BACKEND as kernel_backend
from .complexes import (
    PointedComplex,
    SimplicialComplex,
    cyclic_polytope_boundary,
    join,
    parse_cplx,
    quotient_model,
    sphere_complex,
    suspension,
    wedge,
)
from .homology import (
    HomologyProfile,
    philip_hall_check,
    reduced_homology,
    smith_normal_form,
)
from .posets import (
    BoundedPoset,
    FinitePoset,
    boolean_lattice,
    chain_poset,
    exp_discrete_poset,
    generate,
    parse_poset,
    partition_lattice,
)
from .spheres import SphereWedge, combine, sphere, wedge_of

__version__ = "0.1.0"

__all__ = [
    "BoundedPoset",
    "FinitePoset",
    "HomologyProfile",
    "PointedComplex",
    "SimplicialComplex",
    "SphereWedge",
    "boolean_lattice",
    "chain_poset",
    "combine",
    "cyclic_polytope_boundary",
    "exp_discrete_poset",
    "generate",
    "join",
    "kernel_backend",
    "parse_cplx",
    "parse_poset",
    "partition_lattice",
    "philip_hall_check",
    "quotient_model",
    "reduced_homology",
    "smith_normal_form",
    "sphere",
    "sphere_complex",
    "suspension",
    "wedge",
    "wedge_of",
]
