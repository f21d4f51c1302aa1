"""Centrality-guided targeted node attacks on weighted networks, scored by flow."""

from .attack import AttackTrace, LowestId, SeededRandom, run_attack, score_trace
from .centrality import CentralityKind, compute
from .flow import anf, gomory_hu_tree, max_flow
from .generators import GeneratorSpec, assign_random_integer_weights, generate
from .graph import WeightedGraph, connected_components, induced_subgraph, largest_component_size, remove_node
from .robustness import MetricKind, attack_average, snapshot

__version__ = "0.1.0"
