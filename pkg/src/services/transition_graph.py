# src/services/transition_graph.py
import logging
import os
from typing import Dict, List, Optional, Tuple

from src.core.errors import OddLength, OutputUnwritable
from src.core.models import Budget, TransitionGraph, ZmTuple
from src.core.zmod import basic_tuple, ducci_iterate, ducci_step
from src.services.cycles import lp_values
from src.services.predecessors import all_predecessors

logger = logging.getLogger(__name__)


def basic_cycle_graph(n: int, m: int, depth: int, budget: Optional[Budget] = None) -> TransitionGraph:
    """
    The basic Ducci cycle of Z_m^n plus `depth` layers of predecessors.
    Layers are expanded breadth-first in lexicographic order; a predecessor
    already in the graph is linked through its existing edge, not duplicated.

    Args:
        n: Even tuple length.
        m: Modulus.
        depth: Number of predecessor layers, >= 0.
        budget: Caps for locating the cycle.

    Returns:
        TransitionGraph with the cycle in iteration order and one layer per depth.

    Raises:
        OddLength: If n is odd.
        ValueError: If depth is negative.
    """
    if n % 2:
        raise OddLength(f"predecessor expansion needs even n, got n={n}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")

    info = lp_values(n, m, budget)
    entry = ducci_iterate(basic_tuple(n, m), info.len)
    cycle = [entry]
    for _ in range(info.per - 1):
        cycle.append(ducci_step(cycle[-1]))

    successor: Dict[ZmTuple, ZmTuple] = {u: ducci_step(u) for u in cycle}
    layers: List[Tuple[ZmTuple, ...]] = [tuple(sorted(cycle, key=ZmTuple.sort_key))]

    for level in range(1, depth + 1):
        fresh = []
        for node in layers[-1]:
            for pred in all_predecessors(node).members:
                if pred in successor:
                    continue
                successor[pred] = node
                fresh.append(pred)
        layers.append(tuple(sorted(fresh, key=ZmTuple.sort_key)))
        logger.debug(f"Layer {level} of Z_{m}^{n} graph has {len(fresh)} nodes")

    ordered = [node for layer in layers for node in layer]
    edges = tuple((node, successor[node]) for node in ordered)
    logger.info(f"Built transition graph for Z_{m}^{n}: {len(ordered)} nodes, cycle length {len(cycle)}")
    return TransitionGraph(n=n, m=m, depth=depth, cycle_nodes=tuple(cycle),
                           layers=tuple(layers), edges=edges)


def _node_id(node: ZmTuple) -> str:
    return f'"{node}"'


def to_dot(graph: TransitionGraph) -> str:
    """Deterministic DOT text; cycle nodes are drawn as double circles."""
    lines = ["digraph ducci {"]
    cycle = set(graph.cycle_nodes)
    for node in graph.nodes:
        shape = "doublecircle" if node in cycle else "circle"
        lines.append(f'  {_node_id(node)} [label="{node}", shape={shape}];')
    for source, target in graph.edges:
        lines.append(f"  {_node_id(source)} -> {_node_id(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(graph: TransitionGraph, path: str) -> str:
    try:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(to_dot(graph))
    except OSError as e:
        logger.error(f"Could not write DOT file {path}: {e}", exc_info=True)
        raise OutputUnwritable(f"cannot write {path}: {e}") from e
    logger.info(f"Wrote {graph.node_count}-node graph to {path}")
    return path
