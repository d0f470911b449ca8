"""
Runs scenarios: the noiseless walk, the noisy copy of every step, the fidelity and coherence series,
placement sweeps over all ordered (sender, receiver) pairs, and CSV/JSON export.
"""
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from typing import Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

import graphs
import metrics
import walk_operations
from exceptions import ExportError
from noise_channels import NoiseFamily, apply_channel
from scenario_controller import ScenarioConfig, ScenarioController
from utilites import format_matrix

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["t", "fidelity", "coherence", "fidelity_noisy", "coherence_noisy"]
CSV_FLOAT_FORMAT = "%.17g"


@dataclass(frozen=True)
class RunSummary:
    sender: int
    receiver: int
    average_fidelity: float
    max_fidelity: float
    argmax_t: int
    peak_times: list
    noise_family: str
    average_fidelity_noisy: float
    max_fidelity_noisy: float
    argmax_t_noisy: int
    perfect_transfer_times: list
    distance: int
    same_partite: Optional[bool]
    sender_location: Optional[str]
    receiver_location: Optional[str]
    non_markovian: bool

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ScenarioResult:
    fidelity: metrics.FidelitySeries
    fidelity_noisy: metrics.FidelitySeries
    coherence: np.ndarray
    coherence_noisy: np.ndarray
    summary: RunSummary

    def to_frame(self):
        t = np.arange(1, self.fidelity.horizon + 1)
        return pd.DataFrame({
            "t": t,
            "fidelity": self.fidelity.values,
            "coherence": self.coherence,
            "fidelity_noisy": self.fidelity_noisy.values,
            "coherence_noisy": self.coherence_noisy,
        }, columns=CSV_COLUMNS)


def noisy_states(controller, states):
    """
    Yields the noisy density matrix for every noiseless state psi_t.
    "once": rho_t' = sum_i K_i(t) |psi_t><psi_t| K_i(t)^dagger, each t starting again from the noiseless psi_t.
    "per-step": the one-step channel is applied after every walk step, rho_t = E_1(U rho_{t-1} U^dagger).
    """
    config, dim = controller.config, controller.dim
    if config.noise_mode == "once":
        for t, psi in states:
            yield apply_channel(config.noise.kraus(t, dim), psi)
        return

    step_channel = config.noise.kraus(1, dim)
    evolution = controller.operator.evolution
    rho = metrics.to_density_matrix(controller.initial_state)
    for _ in states:
        rho = apply_channel(step_channel, evolution @ rho @ evolution.conj().T)
        yield rho


def run_scenario(config, graph=None):
    """
    Runs one scenario for t = 1..steps.
    :param config: ScenarioConfig
    :param graph: optional prebuilt graph; otherwise the config builds it
    :return: ScenarioResult
    """
    controller = ScenarioController(config, graph)
    return run_controller(controller)


def run_controller(controller):
    config = controller.config
    target = controller.target_state
    steps = list(walk_operations.trajectory(controller.operator, controller.initial_state, config.steps))

    fidelity = np.array([metrics.fidelity_pure(psi, target) for _, psi in steps])
    coherence = np.array([metrics.coherence_l1(psi) for _, psi in steps])

    if config.noise.family == NoiseFamily.NONE and config.noise_mode == "once":
        fidelity_noisy, coherence_noisy = fidelity.copy(), coherence.copy()
    else:
        fidelity_noisy, coherence_noisy = np.empty(config.steps), np.empty(config.steps)
        for i, rho in enumerate(noisy_states(controller, steps)):
            fidelity_noisy[i] = metrics.fidelity_to_pure(rho, target)
            coherence_noisy[i] = metrics.coherence_l1(rho)

    series = metrics.FidelitySeries(fidelity)
    series_noisy = metrics.FidelitySeries(fidelity_noisy)
    seed_n = config.seed_path if config.graph_file is None else None
    placement = graphs.describe_placement(controller.graph, seed_n, config.sender, config.receiver)
    summary = RunSummary(
        sender=config.sender,
        receiver=config.receiver,
        average_fidelity=metrics.average_fidelity(series),
        max_fidelity=series.maximum,
        argmax_t=series.argmax,
        peak_times=series.peak_times(config.peak_threshold),
        noise_family=config.noise.family.value,
        average_fidelity_noisy=metrics.average_fidelity(series_noisy),
        max_fidelity_noisy=series_noisy.maximum,
        argmax_t_noisy=series_noisy.argmax,
        perfect_transfer_times=[t for t, psi in steps if walk_operations.is_perfect_transfer(psi, target)],
        distance=placement.distance,
        same_partite=placement.same_partite,
        sender_location=placement.sender_location,
        receiver_location=placement.receiver_location,
        non_markovian=config.noise.is_non_markovian,
    )
    logger.info("%d -> %d: average fidelity %.6f, max %.6f at t=%d (noise: %s)",
                summary.sender, summary.receiver, summary.average_fidelity,
                summary.max_fidelity, summary.argmax_t, summary.noise_family)
    return ScenarioResult(series, series_noisy, coherence, coherence_noisy, summary)


def sweep_placements(graph, steps=200, noise=None, base=None, workers=1, progress=False):
    """
    Runs every ordered (sender, receiver) pair of the graph.
    :param graph: connected graph with at least two vertices
    :param steps: horizon T
    :param noise: NoiseSpec, defaults to the base config's
    :param base: ScenarioConfig supplying the remaining options
    :param workers: number of threads; the ranking does not depend on it
    :param progress: show a tqdm progress bar
    :return: RunSummary list, best average fidelity first, ties by (sender, receiver)
    """
    base = base or ScenarioConfig()
    options = {"steps": steps}
    if noise is not None:
        options["noise"] = noise
    base = replace(base, **options)

    n = graphs.vertex_count(graph)
    pairs = [(s, r) for s in range(n) for r in range(n) if s != r]

    def run_pair(pair):
        config = replace(base, sender=pair[0], receiver=pair[1])
        return run_scenario(config, graph).summary

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        summaries = list(tqdm(executor.map(run_pair, pairs), total=len(pairs),
                              desc="placements", disable=not progress))
    return sorted(summaries, key=lambda summary: (-summary.average_fidelity, summary.sender, summary.receiver))


def export(result, csv_path=None, json_path=None):
    """
    Writes the per-step series as CSV (header t,fidelity,coherence,fidelity_noisy,coherence_noisy)
    and the run summary as JSON.
    """
    if csv_path is not None:
        try:
            result.to_frame().to_csv(csv_path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        except OSError as e:
            raise ExportError(csv_path, e.strerror or str(e)) from None
        logger.info("series written to %s", csv_path)
    if json_path is not None:
        write_json(result.summary.to_dict(), json_path)


def export_sweep(summaries, csv_path):
    frame = pd.DataFrame([summary.to_dict() for summary in summaries])
    for column in ("peak_times", "perfect_transfer_times"):
        frame[column] = frame[column].map(lambda times: " ".join(str(t) for t in times))
    try:
        frame.to_csv(csv_path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise ExportError(csv_path, e.strerror or str(e)) from None
    logger.info("sweep ranking written to %s", csv_path)


def write_json(data, json_path):
    try:
        with open(json_path, "w") as json_file:
            json.dump(data, json_file, indent=4)
    except OSError as e:
        raise ExportError(json_path, e.strerror or str(e)) from None
    logger.info("summary written to %s", json_path)


def dump_operators(operator, stream):
    for name in ("coin", "shift", "evolution"):
        stream.write(f"# {name} ({operator.dim}x{operator.dim})\n")
        stream.write(format_matrix(getattr(operator, name)) + "\n")


@dataclass(frozen=True)
class TableRow:
    table: str
    sender: int
    receiver: int
    expected: float
    average_fidelity: float
    average_from_zero: float

    @property
    def residual(self):
        return self.average_fidelity - self.expected

    @property
    def residual_from_zero(self):
        return self.average_from_zero - self.expected


def reproduce_tables(tables, base=None):
    """
    Recomputes the reference average-fidelity tables.
    Each row is averaged over t = 1..T and, to measure the other possible convention, over t = 0..T-1.
    :param tables: list of {"name", "seed_path", "wings", "steps", "rows": [[s, r, expected], ...]}
    :return: list of TableRow
    """
    base = base or ScenarioConfig()
    rows = []
    for table in tables:
        graph = graphs.build_butterfly(graphs.build_path(table["seed_path"]), table["wings"])
        for sender, receiver, expected in table["rows"]:
            config = replace(base, seed_path=table["seed_path"], wings=table["wings"], graph_file=None,
                             sender=sender, receiver=receiver, steps=table["steps"])
            controller = ScenarioController(config, graph)
            result = run_controller(controller)
            initial = metrics.fidelity_pure(controller.initial_state, controller.target_state)
            from_zero = (initial + result.fidelity.values[:-1].sum()) / table["steps"]
            rows.append(TableRow(table["name"], sender, receiver, expected,
                                 result.summary.average_fidelity, float(from_zero)))
    return rows
