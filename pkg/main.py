import logging
import sys

from commands import cli


def configure_logging(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format='%(asctime)s - %(levelname)s - %(message)s')


def main(argv=None, stream=None):
    args = cli.build_parser().parse_args(argv)
    configure_logging(args.verbose)
    return cli.run_command(args, stream)


if __name__ == "__main__":
    sys.exit(main())
