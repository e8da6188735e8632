"""Exact loop algebras over Laurent polynomial rings, their universal central
extensions, automorphism lifting and finite Galois descent."""

__version__ = "0.1.0"

from .scalars import CycScalar, LaurentPoly, RingAut, Window, parse_poly, parse_scalar, zeta
from .lie_core import (GAut, LoopElement, StructureTable, build_split_simple, killing, named_aut,
                       verify_table)
from .kahler import DifferentialClass, aut_act_class, bar, brute_force_dims, class_of, degree_dim
from .extension import (Cocycle, EFCocycle, ExtElement, KasselCocycle, ResidueCocycle, TabulatedCocycle,
                        cocycle_verify, ext_bracket, make_cocycle)
from .autlift import (LiftCertificate, LoopAut, NoLift, NotScalar, ScalarAction, build_lifted,
                      gl2z_zeta_enumerate, scalar_centre_action, solve_lift)
from .descent import (DescentDatum, GaloisSpec, average_completion, fixed_hat, fixed_loop,
                      shipped_datum, stability_check, verify_central_extension)

__all__ = [
    "CycScalar", "LaurentPoly", "RingAut", "Window", "parse_poly", "parse_scalar", "zeta",
    "GAut", "LoopElement", "StructureTable", "build_split_simple", "killing", "named_aut", "verify_table",
    "DifferentialClass", "aut_act_class", "bar", "brute_force_dims", "class_of", "degree_dim",
    "Cocycle", "EFCocycle", "ExtElement", "KasselCocycle", "ResidueCocycle", "TabulatedCocycle",
    "cocycle_verify", "ext_bracket", "make_cocycle",
    "LiftCertificate", "LoopAut", "NoLift", "NotScalar", "ScalarAction", "build_lifted",
    "gl2z_zeta_enumerate", "scalar_centre_action", "solve_lift",
    "DescentDatum", "GaloisSpec", "average_completion", "fixed_hat", "fixed_loop",
    "shipped_datum", "stability_check", "verify_central_extension",
]
