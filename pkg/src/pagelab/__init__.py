"""Page replacement automata and FIFO anomaly constructions."""
from .paging import (
    DegenerateInputError, FifoQueue, InvalidStateError, Policy, RatioReport, SimulationResult,
    anomaly_ratio, cyclic_rate_estimate, fifo_step, lru_step, min_victim, paging_rate_finite,
    simulate,
)
from .construct import (
    anomaly_prefix, classical_example, construct_for_ratio, cycle_block, target_state,
    unbounded_family,
)

__version__ = "0.1.0"
