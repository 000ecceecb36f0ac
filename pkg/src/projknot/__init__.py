"""Certified computations on the projective space of the knot concordance
group: signatures, four-genus intervals, projective distances, Rips
complexes, and projectivization of finitely generated abelian groups."""

from .errors import DomainError, ParseError, PrimitivityError, UnsupportedGeneratorError
from .exactnum import StepFunction, sf_add, sf_argmax_abs, sf_eval, sf_scale, sf_sup_abs
from .genus import (
    GenusInterval,
    SurgerySchema,
    closed_form_b1,
    g4_interval,
    max_surgeries,
    max_surgeries_bruteforce,
    schema_validate,
    upper_bound_g4,
)
from .knots import (
    KnotCombo,
    TorusKnot,
    TwistKnot,
    combo_signature,
    corollary_jump_values,
    double_floor,
    parse_combo,
    sharp_S,
    torus_signature,
    twist_jump_cosine,
)
from .metric import (
    ClassNode,
    DistInterval,
    ball_radius_one,
    big_delta_interval,
    chain_witness_check,
    dbar_search,
    delta_certified,
    growth_ratio,
    zz_big_delta,
    zz_delta,
)
from .projective import (
    FgGroup,
    GroupElement,
    canonicalize,
    class_count,
    common_multiple_witness,
    equivalent,
    related_one_step,
)
from .rips import RipsComplex, build_rips, twist_clique

__version__ = "0.1.0"
