"""Exact reproduction and certification of classical square- and cube-root approximations."""

from .bracket import PowerBracket, bracket
from .certify import (
    Approximation,
    BoundKind,
    Certificate,
    Closeness,
    certify_bound,
    compare_errors,
    method_table,
    smyly_scan,
    wave_samples,
)
from .cuberoot import CubeMethod, cube_estimate
from .exactnum import DomainError, Enclosure, decimal_string, floor_root, mixed, root_enclosure
from .rescale import RescalePlan, rescaled_estimate
from .squareroot import SqrtMethod, cf_sqrt, heron_iterate, sqrt_estimate

__version__ = "0.1.0"
