"""Exact structure-constant checks for module coalgebras, equivariant
bicomodules and the lax module functors they induce."""

from .exactla import GF, QQ, Field, LinearMap
from .structures import (
    Bialgebra, Bicomodule, CheckReport, Coalgebra, EquivariantBicomodule, HopfAlgebra,
    LeftComodule, LeftModule, ModuleCoalgebra, RightComodule,
)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Field", "LinearMap", "Bialgebra", "Bicomodule", "CheckReport", "Coalgebra",
    "EquivariantBicomodule", "HopfAlgebra", "LeftComodule", "LeftModule", "ModuleCoalgebra",
    "RightComodule",
]
