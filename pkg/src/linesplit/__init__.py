"""Exact decision procedures for splitting line bundles off complex vector bundles."""

from .algebra import (
    TRIVIAL,
    AbelianGroup,
    IntMatrix,
    Z,
    cokernel_group,
    cyclic,
    has_n_torsion,
    hom_and_ext,
    smith_normal_form,
)
from .chern import (
    ChernVector,
    LineBundle,
    top_vanishing,
    virtual_chern,
    virtual_chern_oracle,
    whitney_sum,
)
from .cpm import DivisionCertificate, divide_out_lines, enumerate_split_chern
from .engine import (
    HypothesesNotMet,
    Obstructed,
    SpaceProfile,
    SplitProblem,
    Splits,
    check_hypothesis,
    decide,
    primary_obstruction,
    profile_cpm,
    span_decide,
)
from .ring import (
    RingProfile,
    TruncatedPoly,
    cpm_ring,
    poly_mul,
    reduce_mod_p,
    unit_inverse,
)
from .steenrod import (
    BPolynomial,
    SqExpr,
    adem_reduce,
    binom_mod2,
    sq2_cpm,
    sq_stiefel,
    sq_wu,
)
from .symfun import binom_sum, cpm_split_admissible, power_sums, schwarzenberger_check
from .tables import (
    OutOfTabulatedRange,
    em_cohomology,
    em_homology,
    pi_2m2,
    stiefel_pi,
    verify_uct,
)

__version__ = "0.1.0"
