"""Center, median and radius algorithms for Helly and k-Helly graphs."""

from ._backend import available as available_backends
from .errors import (
    AlgorithmError,
    GateNotFoundError,
    HellyError,
    InputError,
    InstanceTooLargeError,
    NotConnectedError,
    OutOfRangeError,
    SamplingFailureError,
    StepBudgetExceededError,
)
from .facility import (
    SearchTrace,
    center_step,
    find_center,
    find_medians,
    median_step,
    sample_start,
)
from .gates import GateTables, QValues, build_gate_tables, q_values, q_values_baseline
from .generators import GenSpec, gen_chordal, gen_helly, has_perfect_elimination_order
from .graph import CostFn, Graph, ball, bfs, eccentricity, from_edge_list, total_distance
from .khelly import DecisionOutcome, RadiusResult, decide_radius, dominating_candidates, radius
from .oracle import ApspSummary, apsp_summary, distance_matrix, verify_gate_tables
from .recognition import HellyReport, check_unimodal, check_witness, is_k_alpha_helly, is_k_helly
from .sets import CandidateSet

__version__ = "0.1.0"


def backend():
    """Name of the kernel backend currently in use."""
    from . import _backend

    return _backend.kernels.NAME
