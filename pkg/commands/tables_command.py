import logging
import sys

import pandas as pd

import runner
from exceptions import ExportError
from scenario_controller import read_presets

logger = logging.getLogger(__name__)


class TablesCommand:
    """
    `tables`: recomputes the reference average-fidelity tables bundled in Scenarios.json
    and reports the residual of both averaging windows.
    """

    @staticmethod
    def add_arguments(parser):
        parser.add_argument("--out-csv", metavar="PATH", help="table rows with residuals")

    def __init__(self, args, stream=None):
        self.args = args
        self.stream = stream or sys.stdout
        self.presets = read_presets()

    def execute(self):
        tolerance = self.presets["tolerance"]
        rows = runner.reproduce_tables(self.presets["tables"])

        frame = pd.DataFrame({
            "table": [row.table for row in rows],
            "sender": [row.sender for row in rows],
            "receiver": [row.receiver for row in rows],
            "expected": [row.expected for row in rows],
            "average_fidelity": [row.average_fidelity for row in rows],
            "residual": [row.residual for row in rows],
            "residual_from_zero": [row.residual_from_zero for row in rows],
        })
        for row in rows:
            if abs(row.residual) > tolerance:
                logger.warning("%s (%d, %d): %.6f differs from %.6f by more than %g",
                               row.table, row.sender, row.receiver, row.average_fidelity, row.expected, tolerance)

        self.stream.write(frame.to_string(index=False) + "\n")
        if self.args.out_csv:
            try:
                frame.to_csv(self.args.out_csv, index=False, float_format=runner.CSV_FLOAT_FORMAT, lineterminator="\n")
            except OSError as e:
                raise ExportError(self.args.out_csv, e.strerror or str(e)) from None
        return 0
