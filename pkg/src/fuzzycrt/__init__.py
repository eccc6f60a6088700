"""Fuzzy simultaneous congruences: feasibility, optimisation and response-time analysis."""
from .core import (
    Constraint,
    FscInstance,
    NormalizedInstance,
    Solution,
    check_guess,
    feasible,
    is_feasible,
    normalize,
    solution_upper_bound,
)
from .errors import (
    InconsistencyError,
    InvalidModulusError,
    NotHarmonicError,
    PreconditionError,
    ResourceLimitError,
)
from .generators import SplitMix64, gen_random_dda, gen_random_harmonic, gen_random_taskset
from .intervals import Interval, ModSet, intersect_one_many, intersect_pair, lift_intersection, project
from .mixing import MixingInstance, mixing_min_s
from .optimize import aggregate_last_two, make_beta_instance, max_s, min_s_aggregate, min_s_binary, solve
from .oracle import oracle_max_s, oracle_min_s
from .realtime import Task, TaskSet, bounds_lu, response_solution, reveal, to_bms
from .reduction import DdaInstance, dda_to_bms, oracle_dda, reduction_roundtrip

__version__ = "0.1.0"
