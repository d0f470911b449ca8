import logging
import sys

import runner
from commands.scenario_options import (add_graph_arguments, add_source_arguments, add_walk_arguments,
                                       config_from_args)

logger = logging.getLogger(__name__)

LISTED_COLUMNS = ["sender", "receiver", "average_fidelity", "max_fidelity", "argmax_t",
                  "average_fidelity_noisy", "distance", "same_partite", "sender_location", "receiver_location"]


class SweepCommand:
    """
    `sweep`: every ordered placement on one graph, ranked by average fidelity.
    """

    @staticmethod
    def add_arguments(parser):
        add_source_arguments(parser)
        add_graph_arguments(parser)
        add_walk_arguments(parser)
        parser.add_argument("--workers", type=int, default=1, help="threads running placements")
        parser.add_argument("--top", type=int, default=10, help="rows listed on stdout")
        parser.add_argument("--out-csv", metavar="PATH", help="full ranking as CSV")
        parser.add_argument("--out-json", metavar="PATH", help="full ranking as JSON")

    def __init__(self, args, stream=None):
        self.args = args
        self.stream = stream or sys.stdout
        self.config = config_from_args(args)

    def execute(self):
        graph = self.config.build_graph()
        logger.info("sweeping %d vertices for %d steps", graph.number_of_nodes(), self.config.steps)
        summaries = runner.sweep_placements(graph, self.config.steps, base=self.config,
                                            workers=self.args.workers, progress=self.stream.isatty())

        if self.config.out_csv:
            runner.export_sweep(summaries, self.config.out_csv)
        if self.config.out_json:
            runner.write_json([summary.to_dict() for summary in summaries], self.config.out_json)

        for rank, summary in enumerate(summaries[:self.args.top], start=1):
            row = summary.to_dict()
            self.stream.write(f"{rank:>4}  " + "  ".join(f"{name}={row[name]}" for name in LISTED_COLUMNS) + "\n")
        return 0
