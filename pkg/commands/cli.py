import argparse
import logging

from commands.run_command import RunCommand
from commands.sweep_command import SweepCommand
from commands.tables_command import TablesCommand
from exceptions import (ConfigError, ExportError, InvalidArgumentError, InvalidStateError, NoPathError,
                        NumericDomainError)

logger = logging.getLogger(__name__)

COMMANDS = {
    "run": (RunCommand, "simulate one sender/receiver placement"),
    "sweep": (SweepCommand, "rank every ordered placement on a graph"),
    "tables": (TablesCommand, "reproduce the reference average-fidelity tables"),
}

EXIT_OK = 0
EXIT_EXPORT = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="butterfly-walk",
        description="Quantum state transfer by coined quantum walks on butterfly graphs.")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (command, help_text) in COMMANDS.items():
        command.add_arguments(subparsers.add_parser(name, help=help_text))
    return parser


def run_command(args, stream=None):
    """
    Executes the selected subcommand and maps failures to exit codes.
    :return: 0 success, 1 export failure, 2 configuration error, 3 numeric-domain error
    """
    command_class, _ = COMMANDS[args.command]
    try:
        return command_class(args, stream).execute()
    except (ConfigError, InvalidArgumentError, NoPathError) as e:
        logger.error("configuration error: %s", e)
        return EXIT_CONFIG
    except (NumericDomainError, InvalidStateError) as e:
        logger.error("numeric domain error: %s", e)
        return EXIT_NUMERIC
    except ExportError as e:
        logger.error("export failed: %s", e)
        return EXIT_EXPORT
