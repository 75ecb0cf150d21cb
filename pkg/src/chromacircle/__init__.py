"""Color spanning circles for imprecise points.

The minimum color spanning circle (MCSC) of a colored point set is the
smallest circle containing at least one point of every color.  When each
point is only known to lie in a closed unit-diameter disk, every choice of
representatives (a *realization*) has its own MCSC, and the interesting
quantities are the extremes over all realizations.  This package provides:

- ``mcsc``: an exact MCSC solver for precise points plus an independent
  Lipschitz grid oracle that brackets the optimum;
- ``smcsc``: the exact smallest MCSC over all realizations, with a
  witnessing realization;
- ``lmcsc``: a certified approximation of the largest MCSC (exact
  maximization is NP-hard): factor at least 1/3 of the optimum, 1/2 when
  no two distinct-color disks intersect, plus a sampling lower-bound
  oracle;
- ``gadgets``: rigid constructions used in hardness experiments (stacks,
  clause gadgets, tightness instances) with checkers and probes;
- ``cli``/``files``/``svg``: a deterministic command line with JSON file
  formats and SVG rendering.
"""

from .geometry import (
    DEFAULT_EPS,
    DEFAULT_TOL,
    DISK_RADIUS,
    Circle,
    CollinearError,
    ColoredDisk,
    ColoredPoint,
    Point,
    Tolerance,
    circumcircle,
    contains,
    diametral_circle,
    dist,
    pull_toward,
)
from .mcsc import (
    EmptyInput,
    McscResult,
    MissingColor,
    PrecisePointSet,
    batch_mcsc_radius,
    feasible,
    mcsc_exact,
    mcsc_grid_oracle,
    mcsc_radius,
)
from .smcsc import Instance, SmcscResult, center_points, centers_mcsc, smcsc
from .lmcsc import (
    Certificate,
    ColorAbsent,
    GridRealization,
    LmcscResult,
    grid_realization,
    is_color_disjoint,
    lmcsc_approx,
    lmcsc_sampling_oracle,
    sample_realizations,
    upper_bound,
)
from .gadgets import (
    BLUE,
    CLAUSE_CORNER_OFFSET,
    CLAUSE_SIDE,
    DELTA_DEFAULT,
    RED,
    STACK_GAP,
    ClauseGadget,
    PDeltaReport,
    StackExtremes,
    StackGadget,
    clause_feasibility,
    make_clause_gadget,
    make_stack,
    make_tightness_instance,
    pdelta_check,
    stack_extreme_realizations,
    stack_rigidity_probe,
)

__version__ = "0.1.0"
