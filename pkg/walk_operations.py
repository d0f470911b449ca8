"""
Coined discrete-time quantum walk on the arc space of a simple graph.

The computational basis has one state per directed arc (tail, head), sorted by tail and then by head,
so the coin is block diagonal in vertex order.
"""
import logging
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np
from scipy.linalg import block_diag

import graphs
from exceptions import InvalidArgumentError
from utilites import read_only, unitarity_residual

logger = logging.getLogger(__name__)

INCOMING = "incoming"
OUTGOING = "outgoing"
RECEIVER_CONVENTIONS = (INCOMING, OUTGOING)


@dataclass(frozen=True)
class ArcBasis:
    arcs: tuple
    index: MappingProxyType

    @classmethod
    def from_graph(cls, graph):
        arcs = sorted([(u, v) for u, v in graph.edges()] + [(v, u) for u, v in graph.edges()])
        return cls(tuple(arcs), MappingProxyType({arc: i for i, arc in enumerate(arcs)}))

    @property
    def dim(self):
        return len(self.arcs)

    def arcs_from(self, tail):
        return [arc for arc in self.arcs if arc[0] == tail]

    def arcs_into(self, head):
        return [arc for arc in self.arcs if arc[1] == head]

    def basis_vector(self, arc):
        vector = np.zeros(self.dim, dtype=complex)
        vector[self.index[arc]] = 1.0
        return vector


def grover_coin(d):
    """
    The Grover diffusion coin 2|phi><phi| - I of a degree-d vertex, where phi is the uniform superposition.
    Diagonal entries are 2/d - 1 and off-diagonal entries 2/d.
    :param d: vertex degree, at least 1
    :return: d x d real numpy array
    """
    if d < 1:
        raise InvalidArgumentError(f"coin dimension must be at least 1, got {d}")
    return np.full((d, d), 2.0 / d) - np.eye(d)


def assemble_coin(graph, basis, sender, receiver):
    """
    Direct sum of the vertex coins in vertex order. The blocks of the sender and the receiver are negated.
    :param graph: the walk graph
    :param basis: ArcBasis of the graph
    :param sender: marked sender vertex
    :param receiver: marked receiver vertex
    :return: 2m x 2m complex numpy array
    """
    graphs.check_vertex(graph, sender)
    graphs.check_vertex(graph, receiver)
    if sender == receiver:
        raise InvalidArgumentError(f"sender and receiver must differ, both are {sender}")

    blocks = []
    for v in range(graph.number_of_nodes()):
        d = graph.degree[v]
        if d == 0:
            continue
        coin = grover_coin(d)
        blocks.append(-coin if v in (sender, receiver) else coin)
    if not blocks:
        return np.zeros((0, 0), dtype=complex)
    return block_diag(*blocks).astype(complex)


def assemble_shift(basis):
    """
    The flip-flop shift S|(i,j)> = |(j,i)>, a permutation matrix which is its own inverse.
    """
    shift = np.zeros((basis.dim, basis.dim), dtype=complex)
    for (i, j), column in basis.index.items():
        shift[basis.index[(j, i)], column] = 1.0
    return shift


def uniform_superposition(basis, arcs):
    state = np.zeros(basis.dim, dtype=complex)
    for arc in arcs:
        state[basis.index[arc]] = 1.0
    return state / np.sqrt(len(arcs))


def sender_state(graph, basis, s):
    """
    Uniform superposition over the arcs leaving s.
    """
    if graphs.degree(graph, s) < 1:
        raise InvalidArgumentError(f"sender {s} is an isolated vertex")
    return uniform_superposition(basis, basis.arcs_from(s))


def receiver_state(graph, basis, r, convention=INCOMING):
    """
    Uniform superposition over the arcs entering r, or over the arcs leaving r with the outgoing convention.
    The outgoing form is the one a walker sitting at r occupies right after a shift.
    :param convention: "incoming" or "outgoing"
    """
    if graphs.degree(graph, r) < 1:
        raise InvalidArgumentError(f"receiver {r} is an isolated vertex")
    if convention == INCOMING:
        return uniform_superposition(basis, basis.arcs_into(r))
    if convention == OUTGOING:
        return uniform_superposition(basis, basis.arcs_from(r))
    raise InvalidArgumentError(f"unknown receiver convention '{convention}'")


@dataclass(frozen=True)
class WalkOperator:
    coin: np.ndarray
    shift: np.ndarray
    evolution: np.ndarray
    sender: int
    receiver: int

    @classmethod
    def assemble(cls, graph, basis, sender, receiver):
        """
        Builds C, S and U = S C for one sender/receiver placement.
        """
        coin = assemble_coin(graph, basis, sender, receiver)
        shift = assemble_shift(basis)
        evolution = shift @ coin
        logger.debug("walk operator: dim=%d, unitarity residual=%.3g", basis.dim, unitarity_residual(evolution))
        return cls(read_only(coin), read_only(shift), read_only(evolution), sender, receiver)

    @property
    def dim(self):
        return self.evolution.shape[0]


def evolve(operator, psi0, t):
    """
    U^t |psi0>, computed by t matrix-vector products.
    :param operator: WalkOperator
    :param psi0: initial pure state
    :param t: number of steps, non-negative
    :return: the state after t steps
    """
    if t < 0:
        raise InvalidArgumentError(f"step count must be non-negative, got {t}")
    psi = np.asarray(psi0, dtype=complex)
    for _ in range(t):
        psi = operator.evolution @ psi
    return psi


def trajectory(operator, psi0, steps):
    """
    Yields (t, U^t |psi0>) for t = 1..steps.
    """
    psi = np.asarray(psi0, dtype=complex)
    for t in range(1, steps + 1):
        psi = operator.evolution @ psi
        yield t, psi


def is_perfect_transfer(psi_t, target, tol=1e-10):
    return abs(np.vdot(target, psi_t)) ** 2 >= 1.0 - tol
