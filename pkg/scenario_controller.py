import json
import logging
from dataclasses import dataclass, field, fields, replace
from numbers import Integral, Real
from typing import Optional

import graphs
import walk_operations
from exceptions import ConfigError, InvalidArgumentError, WalkError
from filepaths import Filepaths
from noise_channels import NoiseFamily, NoiseSpec

logger = logging.getLogger(__name__)

NOISE_MODES = ("once", "per-step")

# scenario-file key -> NoiseSpec attribute
NOISE_KEYS = {
    "rtn.a": "rtn_a",
    "rtn.gamma": "rtn_gamma",
    "oun.lambda": "oun_lambda",
    "oun.gamma": "oun_gamma",
    "nmad.g": "nmad_g",
    "nmad.gamma": "nmad_gamma",
}


def is_integer(value):
    return isinstance(value, Integral) and not isinstance(value, bool)


@dataclass(frozen=True)
class ScenarioConfig:
    """
    Everything needed to run one sender/receiver placement.
    The graph is either a butterfly grown from a path (seed_path, wings) or an edge-list file (graph_file).
    """
    seed_path: Optional[int] = None
    wings: int = 0
    graph_file: Optional[str] = None
    sender: Optional[int] = None
    receiver: Optional[int] = None
    steps: int = 200
    noise: NoiseSpec = field(default_factory=NoiseSpec)
    receiver_convention: str = walk_operations.OUTGOING
    peak_threshold: float = 0.8
    noise_mode: str = "once"
    out_csv: Optional[str] = None
    out_json: Optional[str] = None

    def check_types(self):
        """
        Scenario files are plain JSON, so every field is checked for its type before any comparison.
        Booleans are rejected wherever a number is expected.
        """
        for name in ("seed_path", "wings", "sender", "receiver", "steps"):
            value = getattr(self, name)
            if value is not None and not is_integer(value):
                raise ConfigError(name, f"must be an integer, got {value!r}")
        if isinstance(self.peak_threshold, bool) or not isinstance(self.peak_threshold, Real):
            raise ConfigError("peak_threshold", f"must be a number, got {self.peak_threshold!r}")
        for name in ("graph_file", "receiver_convention", "noise_mode", "out_csv", "out_json"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, str):
                raise ConfigError(name, f"must be a string, got {value!r}")
        if self.wings is None:
            raise ConfigError("wings", "must be an integer, got None")

    def validate(self):
        self.check_types()
        if self.seed_path is not None and self.seed_path < 1:
            raise ConfigError("seed_path", f"must be at least 1, got {self.seed_path}")
        if self.wings < 0:
            raise ConfigError("wings", f"must be non-negative, got {self.wings}")
        if self.sender is None:
            raise ConfigError("sender", "is required")
        if self.receiver is None:
            raise ConfigError("receiver", "is required")
        if self.sender == self.receiver:
            raise ConfigError("receiver", f"must differ from the sender ({self.sender})")
        if self.steps < 1:
            raise ConfigError("steps", f"must be at least 1, got {self.steps}")
        if self.receiver_convention not in walk_operations.RECEIVER_CONVENTIONS:
            raise ConfigError("receiver_convention", f"unknown value '{self.receiver_convention}'")
        if self.noise_mode not in NOISE_MODES:
            raise ConfigError("noise_mode", f"unknown value '{self.noise_mode}'")
        if not 0.0 <= self.peak_threshold <= 1.0:
            raise ConfigError("peak_threshold", f"must lie in [0, 1], got {self.peak_threshold}")
        return self

    def build_graph(self):
        if (self.seed_path is None) == (self.graph_file is None):
            raise ConfigError("graph", "give exactly one of seed_path or graph_file")
        if self.graph_file is not None:
            try:
                return graphs.read_edge_list(self.graph_file)
            except OSError as e:
                raise ConfigError("graph_file", str(e)) from None
            except InvalidArgumentError as e:
                raise ConfigError("graph_file", str(e)) from None
        return graphs.build_butterfly(graphs.build_path(self.seed_path), self.wings)


def config_from_mapping(values, base=None):
    """
    Overlays a flat scenario mapping (the scenario-file format) on a base config.
    :param values: dict with ScenarioConfig field names, "noise" and the dotted noise parameter keys
    :param base: ScenarioConfig to start from, defaults to ScenarioConfig()
    :return: a new ScenarioConfig (not yet validated)
    """
    base = base or ScenarioConfig()
    plain_fields = {f.name for f in fields(ScenarioConfig)} - {"noise"}
    updates, noise_updates = {}, {}

    for key, value in values.items():
        if value is None:
            continue
        if key in NOISE_KEYS:
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigError(key, f"must be a number, got {value!r}")
            noise_updates[NOISE_KEYS[key]] = float(value)
        elif key == "noise":
            try:
                noise_updates["family"] = NoiseFamily(value)
            except ValueError:
                raise ConfigError("noise", f"unknown noise family '{value}'") from None
        elif key in plain_fields:
            updates[key] = value
        else:
            raise ConfigError(key, "unknown scenario field")

    # a butterfly seed given on top of a file-based base (or the reverse) replaces the graph source
    if "seed_path" in updates and "graph_file" not in updates:
        updates["graph_file"] = None
    if "graph_file" in updates and "seed_path" not in updates:
        updates["seed_path"] = None

    try:
        noise = replace(base.noise, **noise_updates)
    except InvalidArgumentError as e:
        raise ConfigError("noise", str(e)) from None
    return replace(base, noise=noise, **updates)


def load_scenario_file(file_path, base=None):
    try:
        with open(file_path, "r") as json_file:
            values = json.load(json_file)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError("scenario", f"cannot read {file_path}: {e}") from None
    if not isinstance(values, dict):
        raise ConfigError("scenario", f"{file_path} must hold a JSON object")
    return config_from_mapping(values, base)


def read_presets(file_path=None):
    """
    Reads the bundled Scenarios.json: named scenario presets and the reference tables.
    """
    with open(file_path or Filepaths.SCENARIO_FILE(), "r") as json_file:
        return json.load(json_file)


def load_preset(name, file_path=None):
    presets = read_presets(file_path)["presets"]
    if name not in presets:
        raise ConfigError("preset", f"unknown preset '{name}', choose from {', '.join(sorted(presets))}")
    return config_from_mapping(presets[name])


class ScenarioController:
    """
    Holds the working state of one scenario: the graph, its arc basis, the walk operator
    and the sender/receiver states.
    """

    def __init__(self, config, graph=None):
        self.config = config.validate()
        self.graph = graph if graph is not None else config.build_graph()

        if not graphs.is_connected(self.graph):
            raise ConfigError("graph", "the walk graph must be connected")
        for name in ("sender", "receiver"):
            vertex = getattr(config, name)
            if not 0 <= vertex < graphs.vertex_count(self.graph):
                raise ConfigError(name, f"vertex {vertex} is not in the graph (0..{graphs.vertex_count(self.graph) - 1})")

        try:
            self.basis = walk_operations.ArcBasis.from_graph(self.graph)
            self.operator = walk_operations.WalkOperator.assemble(self.graph, self.basis, config.sender, config.receiver)
            self.initial_state = walk_operations.sender_state(self.graph, self.basis, config.sender)
            self.target_state = walk_operations.receiver_state(
                self.graph, self.basis, config.receiver, config.receiver_convention)
        except WalkError as e:
            raise ConfigError("graph", str(e)) from None

        logger.debug("scenario %d -> %d on %d vertices, %d arcs",
                     config.sender, config.receiver, graphs.vertex_count(self.graph), self.basis.dim)

    @property
    def dim(self):
        return self.basis.dim
