"""
rhNEAT: Rolling Horizon NEAT for real-time grid games

Plans each decision by evolving a small population of NEAT networks whose
rollouts are simulated through a budgeted forward model.

This package provides:
- NEAT genomes, innovations, variation and speciation (rhneat.neat)
- Acyclic network phenotypes
- A deterministic grid-game kit with a five-game suite plus a corridor toy
- Egocentric feature extraction
- The rhNEAT planner and the RHEA, MCTS and random baselines
- An ablation benchmark harness (rhneat.bench, ``rhneat-bench``)
"""

__version__ = "1.0.0"
__author__ = "rhNEAT Team"

from .exceptions import (
    BudgetExhaustedError,
    ConfigurationError,
    CycleError,
    GameError,
    GenomeError,
    InputSizeError,
    InvalidActionError,
    RhneatException,
    SchemaChangedError,
)
from .interfaces import Agent, BudgetedModel, ForwardModel
from .types import (
    Action,
    AgentKind,
    Category,
    FitnessMode,
    LogLevel,
    MctsConfig,
    NeatParams,
    RewardMode,
    RheaConfig,
    RhneatConfig,
    Status,
)

__all__ = [
    "Action",
    "Agent",
    "AgentKind",
    "BudgetExhaustedError",
    "BudgetedModel",
    "Category",
    "ConfigurationError",
    "CycleError",
    "FitnessMode",
    "ForwardModel",
    "GameError",
    "GenomeError",
    "InputSizeError",
    "InvalidActionError",
    "LogLevel",
    "MctsConfig",
    "NeatParams",
    "RewardMode",
    "RheaConfig",
    "RhneatConfig",
    "RhneatException",
    "SchemaChangedError",
    "Status",
]
