"""Circuits, cospans, corelations and signal-flow terms, with black-boxing into
exact linear and affine relations over Q(s)."""

from .kfield import S, Scalar, parse_scalar
from .linrel import LinRel, frel_generator, rel_compose, rel_dagger, rel_tensor
from .symplag import AffRel, aff_compose, aff_tensor, is_lagrangian_affine, is_lagrangian_linear
from .setcat import Corelation, Cospan, functor_H, functor_K
from .circuit import Circuit, Label, blackbox, builtin_semantics, circ_compose, circ_tensor, functor_G

__version__ = "0.1.0"

__all__ = [
    "S", "Scalar", "parse_scalar",
    "LinRel", "frel_generator", "rel_compose", "rel_dagger", "rel_tensor",
    "AffRel", "aff_compose", "aff_tensor", "is_lagrangian_affine", "is_lagrangian_linear",
    "Corelation", "Cospan", "functor_H", "functor_K",
    "Circuit", "Label", "blackbox", "builtin_semantics", "circ_compose", "circ_tensor", "functor_G",
]
