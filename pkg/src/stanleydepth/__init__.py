"""Exact invariants of positively determined monomial quotient modules.

Core objects: MonomialIdeal, PairModule (I/J with a materialized degree
grid), multigraded Betti tables via Koszul homology, and exact Stanley
depth / shreg via interval-partition exact-cover search, together with
Alexander duality, sliding, skeletons, and a theorem-verification harness.
"""
from .core import Grid, Interval, Multidegree, join, leq, meet, slide_vec, supp, supp_rel
from .errors import (
    DimensionError,
    DomainError,
    ParseError,
    ResourceError,
    ZeroModuleError,
)
from .harness import (
    CheckReport,
    InstanceFamily,
    check_cogeneric_conjecture,
    check_duality_depth,
    check_duality_sdepth,
    check_IJ_layer,
    check_linear_quotient_slides,
    check_sequences,
    check_skeletons,
    check_slide_invariance,
    construct_generic_J,
    enumerate_ideals,
    random_cogeneric_ideal,
    survey_conjecture,
)
from .homology import (
    BettiTable,
    FieldSpec,
    QQ,
    betti_degree,
    betti_table,
    depth,
    is_cohen_macaulay,
    projdim,
    sreg,
)
from .ideal import MonomialIdeal, intersect_many, irreducible_ideal, skeleton_power_ideal
from .pairmod import (
    PairModule,
    ideal_module,
    interval_closure,
    interval_module,
    make_pair,
    quotient_ring,
)
from .stanley import (
    IntervalPartition,
    PartitionCheck,
    SearchConfig,
    StanleySpace,
    dual_partition,
    partition_sdepth,
    partition_shreg,
    refine_to_stanley,
    sdepth,
    shreg,
    stanley_space_degrees,
    validate_partition,
)
from .cli import parse_ideal, print_ideal

__version__ = "0.1.0"
