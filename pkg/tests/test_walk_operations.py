import numpy as np
import pytest
from scipy.linalg import block_diag

import graphs
import walk_operations
from exceptions import InvalidArgumentError
from walk_operations import ArcBasis, WalkOperator

X = np.array([[0, 1], [1, 0]], dtype=complex)

# arc order of the printed B_1 shift matrix
PRINTED_B1_ARCS = [(0, 1), (0, 2), (1, 0), (1, 3), (3, 2), (2, 0), (2, 3), (3, 1)]
PRINTED_B1_SHIFT_COLUMNS = [2, 5, 0, 7, 6, 1, 4, 3]


def operator_for(graph, s, r):
    return WalkOperator.assemble(graph, ArcBasis.from_graph(graph), s, r)


class TestArcBasis:
    def test_sorted_by_tail_then_head(self, b1):
        basis = ArcBasis.from_graph(b1)
        assert basis.arcs == ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))
        assert basis.dim == 8

    def test_every_edge_in_both_orientations(self, scenario_graph):
        basis = ArcBasis.from_graph(scenario_graph)
        assert basis.dim == 2 * graphs.edge_count(scenario_graph)
        for u, v in scenario_graph.edges():
            assert (u, v) in basis.index and (v, u) in basis.index

    def test_b3_dimensions(self, b3_p2, b3_p3):
        assert ArcBasis.from_graph(b3_p2).dim == 20
        assert ArcBasis.from_graph(b3_p3).dim == 34


class TestGroverCoin:
    def test_two(self):
        assert np.allclose(walk_operations.grover_coin(2), [[0, 1], [1, 0]])

    def test_three(self):
        assert np.allclose(walk_operations.grover_coin(3), (np.full((3, 3), 2.0) - 3 * np.eye(3)) / 3)

    def test_five(self):
        coin = walk_operations.grover_coin(5)
        assert np.allclose(np.diag(coin), -0.6)
        assert np.allclose(coin[~np.eye(5, dtype=bool)], 0.4)

    def test_one_is_identity(self):
        assert np.allclose(walk_operations.grover_coin(1), [[1]])

    @pytest.mark.parametrize("d", range(1, 9))
    def test_symmetric_orthogonal_involution(self, d):
        coin = walk_operations.grover_coin(d)
        assert np.allclose(coin, coin.T)
        assert np.allclose(coin @ coin, np.eye(d), atol=1e-12)

    def test_zero_rejected(self):
        with pytest.raises(InvalidArgumentError):
            walk_operations.grover_coin(0)


class TestAssembleCoin:
    def test_b1_body_marked(self, b1):
        coin = walk_operations.assemble_coin(b1, ArcBasis.from_graph(b1), 0, 1)
        assert np.array_equal(coin, block_diag(-X, -X, X, X))

    def test_b1_body_and_wing_marked(self, b1):
        coin = walk_operations.assemble_coin(b1, ArcBasis.from_graph(b1), 1, 2)
        assert np.array_equal(coin, block_diag(X, -X, -X, X))

    def test_p2(self, p2):
        coin = walk_operations.assemble_coin(p2, ArcBasis.from_graph(p2), 0, 1)
        assert np.array_equal(coin, -np.eye(2))

    def test_same_vertex_rejected(self, b1):
        with pytest.raises(InvalidArgumentError):
            walk_operations.assemble_coin(b1, ArcBasis.from_graph(b1), 2, 2)

    def test_out_of_range_rejected(self, b1):
        with pytest.raises(InvalidArgumentError):
            walk_operations.assemble_coin(b1, ArcBasis.from_graph(b1), 0, 4)

    def test_blocks_follow_vertex_order(self, b3_p3):
        basis = ArcBasis.from_graph(b3_p3)
        coin = walk_operations.assemble_coin(b3_p3, basis, 5, 6)
        for row, (tail, _) in enumerate(basis.arcs):
            for column, (other_tail, _) in enumerate(basis.arcs):
                if tail != other_tail:
                    assert coin[row, column] == 0

    def test_coin_is_an_involution(self, scenario_graph):
        coin = walk_operations.assemble_coin(scenario_graph, ArcBasis.from_graph(scenario_graph), 0, 1)
        assert np.allclose(coin @ coin, np.eye(coin.shape[0]), atol=1e-12)


class TestAssembleShift:
    def test_p2(self, p2):
        assert np.array_equal(walk_operations.assemble_shift(ArcBasis.from_graph(p2)), X)

    def test_b1_matches_printed_matrix(self, b1):
        basis = ArcBasis.from_graph(b1)
        printed = np.zeros((8, 8))
        printed[np.arange(8), PRINTED_B1_SHIFT_COLUMNS] = 1
        permutation = np.zeros((8, 8))
        for printed_index, arc in enumerate(PRINTED_B1_ARCS):
            permutation[basis.index[arc], printed_index] = 1

        expected = permutation @ printed @ permutation.T
        assert np.array_equal(walk_operations.assemble_shift(basis), expected)

        operator = operator_for(b1, 0, 1)
        assert np.array_equal(operator.evolution, expected @ block_diag(-X, -X, X, X))

    def test_involution(self, scenario_graph):
        shift = walk_operations.assemble_shift(ArcBasis.from_graph(scenario_graph))
        assert np.array_equal(shift @ shift, np.eye(shift.shape[0]))


class TestStates:
    def test_sender_on_b2(self, b2):
        basis = ArcBasis.from_graph(b2)
        state = walk_operations.sender_state(b2, basis, 0)
        expected = sum(basis.basis_vector(arc) for arc in [(0, 1), (0, 2), (0, 4)]) / np.sqrt(3)
        assert np.allclose(state, expected)

    def test_sender_on_p2(self, p2):
        basis = ArcBasis.from_graph(p2)
        assert np.allclose(walk_operations.sender_state(p2, basis, 0), basis.basis_vector((0, 1)))

    def test_sender_on_b3_from_p3(self, b3_p3):
        basis = ArcBasis.from_graph(b3_p3)
        state = walk_operations.sender_state(b3_p3, basis, 4)
        expected = sum(basis.basis_vector(arc) for arc in [(4, 1), (4, 3), (4, 5)]) / np.sqrt(3)
        assert np.allclose(state, expected)

    def test_incoming_receiver_on_b2(self, b2):
        basis = ArcBasis.from_graph(b2)
        state = walk_operations.receiver_state(b2, basis, 5)
        expected = (basis.basis_vector((1, 5)) + basis.basis_vector((4, 5))) / np.sqrt(2)
        assert np.allclose(state, expected)

    def test_incoming_receiver_on_p2(self, p2):
        basis = ArcBasis.from_graph(p2)
        assert np.allclose(walk_operations.receiver_state(p2, basis, 1), basis.basis_vector((0, 1)))

    def test_incoming_receiver_on_b3_from_p2(self, b3_p2):
        basis = ArcBasis.from_graph(b3_p2)
        state = walk_operations.receiver_state(b3_p2, basis, 6)
        expected = (basis.basis_vector((0, 6)) + basis.basis_vector((7, 6))) / np.sqrt(2)
        assert np.allclose(state, expected)

    def test_outgoing_receiver_on_b2(self, b2):
        basis = ArcBasis.from_graph(b2)
        state = walk_operations.receiver_state(b2, basis, 1, walk_operations.OUTGOING)
        expected = sum(basis.basis_vector(arc) for arc in [(1, 0), (1, 3), (1, 5)]) / np.sqrt(3)
        assert np.allclose(state, expected)

    def test_unknown_convention(self, b2):
        with pytest.raises(InvalidArgumentError):
            walk_operations.receiver_state(b2, ArcBasis.from_graph(b2), 1, "sideways")

    def test_isolated_vertex(self):
        graph = graphs.make_graph(3, [(0, 1)])
        basis = ArcBasis.from_graph(graph)
        with pytest.raises(InvalidArgumentError):
            walk_operations.sender_state(graph, basis, 2)
        with pytest.raises(InvalidArgumentError):
            walk_operations.receiver_state(graph, basis, 2)

    def test_states_are_normalized(self, scenario_graph):
        basis = ArcBasis.from_graph(scenario_graph)
        for v in scenario_graph.nodes():
            assert np.isclose(np.linalg.norm(walk_operations.sender_state(scenario_graph, basis, v)), 1.0)
            assert np.isclose(np.linalg.norm(walk_operations.receiver_state(scenario_graph, basis, v)), 1.0)


class TestEvolution:
    def test_p2_first_step(self, p2):
        basis = ArcBasis.from_graph(p2)
        operator = operator_for(p2, 0, 1)
        psi1 = walk_operations.evolve(operator, walk_operations.sender_state(p2, basis, 0), 1)
        assert np.allclose(psi1, -basis.basis_vector((1, 0)))

    def test_zero_steps(self, b2):
        basis = ArcBasis.from_graph(b2)
        psi0 = walk_operations.sender_state(b2, basis, 2)
        assert np.array_equal(walk_operations.evolve(operator_for(b2, 2, 5), psi0, 0), psi0)

    def test_negative_steps(self, p2):
        with pytest.raises(InvalidArgumentError):
            walk_operations.evolve(operator_for(p2, 0, 1), np.array([1, 0], dtype=complex), -1)

    def test_trajectory_matches_evolve(self, b3_p2):
        basis = ArcBasis.from_graph(b3_p2)
        operator = operator_for(b3_p2, 5, 6)
        psi0 = walk_operations.sender_state(b3_p2, basis, 5)
        for t, psi in walk_operations.trajectory(operator, psi0, 12):
            assert np.allclose(psi, walk_operations.evolve(operator, psi0, t))

    def test_perfect_transfer_on_p2(self, p2):
        basis = ArcBasis.from_graph(p2)
        psi1 = walk_operations.evolve(operator_for(p2, 0, 1), walk_operations.sender_state(p2, basis, 0), 1)
        target = walk_operations.receiver_state(p2, basis, 1, walk_operations.OUTGOING)
        assert walk_operations.is_perfect_transfer(psi1, target)
        assert not walk_operations.is_perfect_transfer(walk_operations.sender_state(p2, basis, 0), target)

    def test_operator_is_read_only(self, b1):
        operator = operator_for(b1, 0, 1)
        with pytest.raises(ValueError):
            operator.evolution[0, 0] = 1.0

    def test_unitary_and_norm_preserving(self, scenario_graph):
        basis = ArcBasis.from_graph(scenario_graph)
        n = graphs.vertex_count(scenario_graph)
        operator = operator_for(scenario_graph, 0, n - 1)
        identity = np.eye(operator.dim)
        assert np.allclose(operator.evolution.conj().T @ operator.evolution, identity, atol=1e-12)
        assert np.allclose(operator.evolution @ operator.evolution.conj().T, identity, atol=1e-12)

        psi0 = walk_operations.sender_state(scenario_graph, basis, 0)
        for _, psi in walk_operations.trajectory(operator, psi0, 1000):
            assert abs(np.linalg.norm(psi) - 1.0) < 1e-10
