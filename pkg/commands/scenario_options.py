from scenario_controller import ScenarioConfig, config_from_mapping, load_preset, load_scenario_file

# argparse dest -> scenario-file key
ARGUMENT_KEYS = {
    "seed_path": "seed_path",
    "wings": "wings",
    "graph_file": "graph_file",
    "sender": "sender",
    "receiver": "receiver",
    "steps": "steps",
    "noise": "noise",
    "rtn_a": "rtn.a",
    "rtn_gamma": "rtn.gamma",
    "oun_lambda": "oun.lambda",
    "oun_gamma": "oun.gamma",
    "nmad_g": "nmad.g",
    "nmad_gamma": "nmad.gamma",
    "receiver_convention": "receiver_convention",
    "peak_threshold": "peak_threshold",
    "noise_mode": "noise_mode",
    "out_csv": "out_csv",
    "out_json": "out_json",
}


def add_graph_arguments(parser):
    graph = parser.add_argument_group("graph")
    graph.add_argument("--seed-path", type=int, metavar="N", help="grow the butterfly from the path P_N")
    graph.add_argument("--wings", type=int, metavar="K", help="number of wings (default 0)")
    graph.add_argument("--graph-file", metavar="PATH", help="edge-list file ('n <count>' header, 'u v' lines)")


def add_walk_arguments(parser):
    walk = parser.add_argument_group("walk")
    walk.add_argument("--steps", type=int, metavar="T", help="horizon (default 200)")
    walk.add_argument("--receiver-convention", choices=["incoming", "outgoing"],
                      help="arcs forming the receiver state (default outgoing)")
    walk.add_argument("--peak-threshold", type=float, metavar="X", help="fidelity counted as a peak (default 0.8)")

    noise = parser.add_argument_group("noise")
    noise.add_argument("--noise", choices=["none", "rtn", "oun", "nmad"])
    noise.add_argument("--noise-mode", choices=["once", "per-step"],
                       help="apply the channel once at each t (default) or compound it after every step")
    noise.add_argument("--rtn-a", type=float)
    noise.add_argument("--rtn-gamma", type=float)
    noise.add_argument("--oun-lambda", type=float)
    noise.add_argument("--oun-gamma", type=float)
    noise.add_argument("--nmad-g", type=float)
    noise.add_argument("--nmad-gamma", type=float)


def add_source_arguments(parser):
    parser.add_argument("--preset", metavar="NAME", help="start from a scenario in Scenarios.json")
    parser.add_argument("--scenario", metavar="PATH", help="JSON scenario file; flags override its fields")


def config_from_args(args):
    """
    Layers defaults, the preset, the scenario file and the explicit flags, in that order.
    :param args: argparse namespace
    :return: ScenarioConfig
    """
    config = ScenarioConfig()
    if getattr(args, "preset", None):
        config = load_preset(args.preset)
    if getattr(args, "scenario", None):
        config = load_scenario_file(args.scenario, config)
    flags = {key: getattr(args, dest) for dest, key in ARGUMENT_KEYS.items() if hasattr(args, dest)}
    return config_from_mapping(flags, config)
