"""
UCT Monte Carlo tree search baseline.

Rollout values are the heuristic values of the final states; they are
normalised into [0, 1] with the running bounds seen during this decision.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..games.base import GameState, evaluate_state
from ..types import MctsConfig
from .budget import MeteredModel

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class TreeNode:
    state: GameState
    depth: int
    n_actions: int
    parent: "TreeNode | None" = None
    action: int = -1
    visits: int = 0
    total: float = 0.0
    children: list["TreeNode | None"] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.children:
            self.children = [None] * self.n_actions

    @property
    def fully_expanded(self) -> bool:
        return all(c is not None for c in self.children)

    @property
    def mean(self) -> float:
        return self.total / self.visits if self.visits else 0.0


def normalise(value: float, low: float, high: float) -> float:
    """Position of ``value`` in [low, high]; 0.5 until the bounds differ"""
    if low < high:
        return min(max((value - low) / (high - low), 0.0), 1.0)
    return 0.5


def uct_value(
    child: TreeNode,
    parent_visits: int,
    bounds: tuple[float, float],
    exploration: float = math.sqrt(2),
) -> float:
    """UCB1 score of ``child``; +inf while it is unvisited."""
    if child.visits == 0:
        return math.inf
    exploit = normalise(child.mean, *bounds)
    explore = exploration * math.sqrt(math.log(parent_visits) / child.visits)
    return exploit + explore


class MctsAgent:
    def __init__(self, config: MctsConfig | None = None, seed: int | None = None, name: str = "mcts"):
        self.config = config or MctsConfig()
        self.rng = np.random.default_rng(seed)
        self.name = name
        self.iterations = 0

    def _select_child(self, node: TreeNode, bounds: tuple[float, float]) -> TreeNode:
        eps = self.config.epsilon
        best: TreeNode | None = None
        best_score = -math.inf
        for child in node.children:
            assert child is not None
            score = uct_value(child, node.visits, bounds, self.config.exploration)
            # tiny multiplicative noise breaks exact ties at random
            score = (score + eps) * (1.0 + eps * (self.rng.random() - 0.5))
            if best is None or score > best_score:
                best, best_score = child, score
        assert best is not None
        return best

    def _tree_policy(self, root: TreeNode, model: MeteredModel, bounds) -> TreeNode | None:
        node = root
        while not node.state.is_terminal and node.depth < self.config.rollout_depth:
            if not node.fully_expanded:
                if model.meter.exhausted:
                    return None
                untried = [a for a, c in enumerate(node.children) if c is None]
                action = untried[int(self.rng.integers(len(untried)))]
                child = TreeNode(
                    state=model.advance(node.state, action),
                    depth=node.depth + 1,
                    n_actions=node.n_actions,
                    parent=node,
                    action=action,
                )
                node.children[action] = child
                return child
            node = self._select_child(node, bounds)
        return node

    def _rollout(self, node: TreeNode, model: MeteredModel) -> float:
        state, depth = node.state, node.depth
        while not state.is_terminal and depth < self.config.rollout_depth and not model.meter.exhausted:
            state = model.advance(state, int(self.rng.integers(node.n_actions)))
            depth += 1
        return evaluate_state(state)

    def act(self, state: GameState, model: MeteredModel) -> int:
        n_actions = model.action_count
        if n_actions == 1:
            return 0
        if model.meter.remaining == 0:
            action = int(self.rng.integers(n_actions))
            logger.warning(f"{self.name}: no forward-model budget at tick {state.tick}, random action {action}")
            return action

        root = TreeNode(state=state, depth=0, n_actions=n_actions)
        low, high = math.inf, -math.inf
        self.iterations = 0
        # every productive iteration spends at least one call; this bounds terminal-only trees
        max_iterations = model.meter.remaining
        while not model.meter.exhausted and self.iterations < max_iterations:
            node = self._tree_policy(root, model, (low, high))
            if node is None:
                break
            value = self._rollout(node, model)
            low, high = min(low, value), max(high, value)
            while node is not None:
                node.visits += 1
                node.total += value
                node = node.parent
            self.iterations += 1

        children = [c for c in root.children if c is not None]
        if not children:
            return int(self.rng.integers(n_actions))
        best = max(children, key=lambda c: (c.visits, c.mean, -c.action))
        logger.debug(f"{self.name}: {self.iterations} iterations, chose {best.action} ({best.visits} visits)")
        return best.action
