import json
import logging
import sys

import runner
from commands.scenario_options import (add_graph_arguments, add_source_arguments, add_walk_arguments,
                                       config_from_args)
from scenario_controller import ScenarioController

logger = logging.getLogger(__name__)


class RunCommand:
    """
    `run`: one sender/receiver placement, noiseless and noisy series, summary on stdout.
    """

    @staticmethod
    def add_arguments(parser):
        add_source_arguments(parser)
        add_graph_arguments(parser)
        parser.add_argument("--sender", type=int, metavar="S")
        parser.add_argument("--receiver", type=int, metavar="R")
        add_walk_arguments(parser)
        parser.add_argument("--out-csv", metavar="PATH", help="per-step series")
        parser.add_argument("--out-json", metavar="PATH", help="run summary")
        parser.add_argument("--dump-operators", action="store_true", help="print C, S and U before running")

    def __init__(self, args, stream=None):
        self.args = args
        self.stream = stream or sys.stdout
        self.config = config_from_args(args)

    def execute(self):
        controller = ScenarioController(self.config)
        if self.args.dump_operators:
            runner.dump_operators(controller.operator, self.stream)

        logger.info("running %d -> %d for %d steps", self.config.sender, self.config.receiver, self.config.steps)
        result = runner.run_controller(controller)
        runner.export(result, self.config.out_csv, self.config.out_json)

        self.stream.write(json.dumps(result.summary.to_dict(), indent=4) + "\n")
        return 0
