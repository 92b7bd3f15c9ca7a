"""
Planning agents sharing one forward-model budget per decision.
"""

from .budget import BudgetMeter, MeteredModel, create_metered_model
from .factory import create_agent
from .mcts import MctsAgent, TreeNode, uct_value
from .random_agent import RandomAgent
from .rhea import RheaAgent
from .rhneat_agent import DecisionInfo, RhneatAgent, RhneatMemory
from .rollout import IndividualStats, RolloutResult, assign_fitness, reward, rollout

__all__ = [
    "BudgetMeter",
    "DecisionInfo",
    "IndividualStats",
    "MctsAgent",
    "MeteredModel",
    "RandomAgent",
    "RheaAgent",
    "RhneatAgent",
    "RhneatMemory",
    "RolloutResult",
    "TreeNode",
    "assign_fitness",
    "create_agent",
    "create_metered_model",
    "reward",
    "rollout",
    "uct_value",
]
