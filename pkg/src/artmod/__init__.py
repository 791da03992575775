"""Exact invariants, resolutions and Tor over Artinian local monomial algebras."""

from .rings import (
    Ideal,
    MonomialAlgebra,
    NotArtinianError,
    RingInvariants,
    loewy_length,
    m2I_is_zero,
    m_power_rows,
    ring_invariants,
)
from .modules import (
    ModuleRep,
    Submodule,
    ZeroModuleError,
    canonical_module,
    cokernel,
    cyclic,
    direct_sum,
    gamma,
    ideal_times,
    is_I_free,
    is_free,
    matlis_dual,
    mI_annihilates,
    quotient,
    socle,
    tensor,
)
from .resolutions import Resolution, Resolver, betti_vector, minimal_resolution, syzygy
from .homology import tor, tor_length, tor_vanishing_window

__version__ = "0.1.0"

__all__ = [
    "Ideal",
    "MonomialAlgebra",
    "ModuleRep",
    "NotArtinianError",
    "Resolution",
    "Resolver",
    "RingInvariants",
    "Submodule",
    "ZeroModuleError",
    "betti_vector",
    "canonical_module",
    "cokernel",
    "cyclic",
    "direct_sum",
    "gamma",
    "ideal_times",
    "is_I_free",
    "is_free",
    "loewy_length",
    "m2I_is_zero",
    "m_power_rows",
    "matlis_dual",
    "mI_annihilates",
    "minimal_resolution",
    "quotient",
    "ring_invariants",
    "socle",
    "syzygy",
    "tensor",
    "tor",
    "tor_length",
    "tor_vanishing_window",
]
