"""
Agent construction by kind.
"""

from ..exceptions import ConfigurationError
from ..interfaces import Agent
from ..types import AgentKind, MctsConfig, RheaConfig, RhneatConfig
from .mcts import MctsAgent
from .random_agent import RandomAgent
from .rhea import RheaAgent
from .rhneat_agent import RhneatAgent


def create_agent(
    kind: AgentKind | str,
    seed: int | None = None,
    name: str | None = None,
    rhneat: RhneatConfig | None = None,
    rhea: RheaConfig | None = None,
    mcts: MctsConfig | None = None,
) -> Agent:
    """
    Create an agent of the given kind.

    Only the config matching ``kind`` is used; the others are ignored.
    """
    try:
        kind = AgentKind(kind)
    except ValueError:
        raise ConfigurationError(
            f"Unknown agent kind {kind!r}", details={"known": [k.value for k in AgentKind]}
        )
    label = name or kind.value
    if kind is AgentKind.RHNEAT:
        return RhneatAgent(rhneat, seed=seed, name=label)
    if kind is AgentKind.RHEA:
        return RheaAgent(rhea, seed=seed, name=label)
    if kind is AgentKind.MCTS:
        return MctsAgent(mcts, seed=seed, name=label)
    return RandomAgent(seed=seed, name=label)
