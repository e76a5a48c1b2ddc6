"""Exact computer algebra for quadratic-form-valued and motivic counts.

Modules:

* ``fields`` / ``gw``: base fields, square classes, Grothendieck-Witt ring
  arithmetic, local symbols, trace forms, symmetric diagonalization;
* ``motivic``: the Tate subring of motivic weights and the three Euler
  characteristic specializations;
* ``series``: truncated power series over caller-supplied rings;
* ``multipoly`` / ``groebner`` / ``ekl``: exact polynomial systems, grevlex
  Groebner bases, quotient algebras and local degree classes;
* ``nearby``: nearby classes and virtual classes from SNC strata;
* ``dt``: partition functions for degree-zero counts on affine 3-space;
* ``castelnuovo``: refined genus-bound fiber integrals for the quintic;
* ``partitions``: brute-force plane-partition oracles;
* ``cli``: the ``arithdt`` command-line tool.
"""

__version__ = "0.1.0"

from .fields import BaseField, CC, QQ, RR, SquareClass, finite_field
from .gw import (
    GaussianInteger,
    GwAlphaElement,
    GwElement,
    alpha_power,
    diagonalize_symmetric,
    hasse_invariant,
    hilbert_symbol,
    trace_form,
)
from .motivic import (
    GeneratorSpec,
    L,
    MotivicClass,
    chi_a1,
    chi_complex,
    chi_real,
    grassmannian_class,
    projective_space_class,
    quadratic_point_generator,
)
from .series import (
    CoefficientRing,
    GAUSSIAN_RING,
    INT_RING,
    MOTIVIC_RING,
    TruncatedSeries,
    gw_alpha_ring,
    gw_ring,
)
from .multipoly import MultiPoly
from .groebner import QuotientAlgebra, buchberger, grevlex_key
from .ekl import (
    ConjugatePair,
    EklResult,
    MilnorReport,
    ekl_class,
    global_degree_univariate,
    local_degree_simple,
    milnor_chi_relation,
    milnor_number_a1,
)
from .nearby import (
    SncData,
    StratumRecord,
    local_nearby_class,
    nearby_class,
    virtual_class_critical_locus,
    virtual_class_torus,
)
from .dt import (
    MatrixTriple,
    PartitionFunctionResult,
    macmahon,
    macmahon_symmetric,
    partition_function,
    trace_potential,
    trace_potential_gradient,
    z_arithmetic,
    z_motivic,
)
from .castelnuovo import (
    CastelnuovoInput,
    GvComparison,
    castelnuovo_bound,
    fiber_dimension,
    gv_arithmetic_direct,
    gv_closed_form,
    gv_compare,
    gv_virtual_class_motivic,
)
from .partitions import (
    count_plane_partitions,
    count_symmetric_plane_partitions,
    plane_partitions,
    verify_macmahon,
    verify_symmetric,
)

__all__ = [name for name in dir() if not name.startswith("_")]
