"""Lower-bound constructions for multicolor Ramsey numbers, with exact verification."""

from .bounds import DerivationTree, BoundFact, derive, explain, load_table, materialize
from .catalog import parse, seed, serialize
from .coloring import (
    ColorGraphView,
    EdgeColoring,
    color_view,
    cyclic_coloring,
    new_coloring,
    relabel_colors,
    restrict,
)
from .constructions import (
    BlockRecipe,
    ConstructionResult,
    IncidenceReinterpretation,
    apply_reinterpretation,
    theorem1_construct,
    theorem2_construct,
)
from .verifier import find_mono_clique, max_mono_clique, naive_mono_clique, verify

__version__ = "0.1.0"

__all__ = [
    "BlockRecipe",
    "BoundFact",
    "ColorGraphView",
    "ConstructionResult",
    "DerivationTree",
    "EdgeColoring",
    "IncidenceReinterpretation",
    "apply_reinterpretation",
    "color_view",
    "cyclic_coloring",
    "derive",
    "explain",
    "find_mono_clique",
    "load_table",
    "materialize",
    "max_mono_clique",
    "naive_mono_clique",
    "new_coloring",
    "parse",
    "relabel_colors",
    "restrict",
    "seed",
    "serialize",
    "theorem1_construct",
    "theorem2_construct",
    "verify",
]
