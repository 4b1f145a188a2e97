"""The balanced candy-sharing game on a ring."""

from .classify import (
    EQUITABLE,
    EQUIVOCAL,
    Kind,
    NotBalanced,
    NotPeriodic,
    NotSymmetric,
    OutcomeReport,
    PeriodicClass,
    TheoremViolation,
    anticlockwise,
    classify_periodic,
    clockwise,
    monopoly,
    predict_outcome,
    predict_symmetric,
)
from .core import (
    Block,
    CandyError,
    ParseError,
    PreconditionError,
    State,
    canonical_rotation,
    concat,
    deficiency,
    fixed_state,
    format_state,
    index,
    is_symmetric,
    parse_state,
    reflect,
    rotate,
    share_one,
    step,
    tau,
)
from .dynamics import CycleNotFound, Trajectory, detect_cycle, is_periodic, orbit
from .enumeration import (
    THEOREMS,
    BudgetExceeded,
    VerificationReport,
    check_states,
    count_states,
    enumerate_states,
    random_states,
    verify,
)

__version__ = "0.1.0"
