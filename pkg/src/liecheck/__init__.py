"""Exact root-system, weight and torus-element computations for simple algebraic groups."""

from .errors import (
    InconsistentConstraints, InvalidInput, LiecheckError, NonLiftableConstraint,
    UnsupportedCharacteristic, WitnessUnavailable,
)
from .rootsys import GroupType, RootSystem, Weight, build_root_system, format_weight, parse_weight
from .torus import (
    GroupValue, TorusElement, ValueGroup, evaluate, is_almost_cyclic, is_central, is_cyclic,
    is_regular, is_strongly_regular, separates_weights, solve_constraints, spectrum,
)
from .weightcalc import WeightSystem, weight_system, weyl_dimension

__version__ = "0.1.0"
