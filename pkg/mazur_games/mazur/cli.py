import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from mazur import __version__
from mazur.commands.common import EXIT_USAGE
from mazur.commands.interactive import cmd_interactive
from mazur.commands.null_demo import cmd_null_demo
from mazur.commands.oracle import cmd_oracle
from mazur.commands.play import cmd_play
from mazur.commands.transfer import cmd_transfer
from mazur.errors import OracleSizeError, UsageError
from mazur.utils.config import load_config
from mazur.utils.logging_setup import setup_logging
from mazur.utils.utils import print_system_env_info

logger = logging.getLogger(__name__)

COMMANDS = {
    "oracle": cmd_oracle,
    "play": cmd_play,
    "transfer": cmd_transfer,
    "null-demo": cmd_null_demo,
    "interactive": cmd_interactive,
}

# flags that map one to one onto configuration keys
CONFIG_FLAGS = (
    "space",
    "rounds",
    "seed",
    "out",
    "jobs",
    "games",
    "epsilon",
    "variant",
    "direction",
    "p1",
    "p2",
    "inner",
    "decay",
    "grid",
    "inject_fault",
)


def _common_flags() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", type=str, default=None, help="JSON file mirroring the flags below.")
    parser.add_argument("--space", type=str, help="unit-interval (default) or finite-grid(N).")
    parser.add_argument("--rounds", type=int, help="Number of stages to play.")
    parser.add_argument("--seed", type=int, help="Seed for random strategies left without one.")
    parser.add_argument("--out", type=str, help="Where to write the JSON transcript or report.")
    parser.add_argument("--jobs", type=int, help="Worker processes for batch games.")
    parser.add_argument("--games", type=int, help="Number of independently seeded games.")
    parser.add_argument("--epsilon", type=str, help="Measure budget as p/q.")
    parser.add_argument("--variant", type=str, choices=["product", "increasing"], help="Game played by `play`.")
    parser.add_argument("--direction", type=str, help="product or increasing: the game the composed Player II plays.")
    parser.add_argument("--p1", type=str, help="Player I strategy, e.g. random:seed=7,growth=extend-by-2.")
    parser.add_argument("--p2", type=str, help="Player II strategy, e.g. shrink:factor=1/4.")
    parser.add_argument("--inner", type=str, help="Player II strategy of the other game used by the composition.")
    parser.add_argument("--decay", type=str, help="Cap Player II radii at ratio^m, e.g. 1/2.")
    parser.add_argument("--grid", type=int, nargs="+", help="Grid sizes for the oracle.")
    parser.add_argument(
        "--inject-fault",
        dest="inject_fault",
        type=str,
        help="skip-dummy-bucket, open-threshold or rtilde-equals-r (transfer); metric (oracle).",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--no-color", dest="no_color", action="store_true", help="Plain pass/FAIL words.")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mazur", description="Exact Banach-Mazur games and strategy transfer.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    subparsers.add_parser("oracle", parents=[common], help="Brute-force checks of the hyperspace on small grids.")
    subparsers.add_parser("play", parents=[common], help="Referee one game between two strategies.")
    subparsers.add_parser("transfer", parents=[common], help="Play and verify composed-strategy games.")
    subparsers.add_parser("null-demo", parents=[common], help="Certify the measure-shrinking Player II.")
    subparsers.add_parser("interactive", parents=[common], help="Play Player I at the terminal.")
    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides = {name: getattr(args, name) for name in CONFIG_FLAGS}
    if args.verbose:
        overrides["verbose"] = True
    if args.no_color or not sys.stdout.isatty():
        overrides["color"] = False
    return overrides


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(verbose=args.verbose, color=not args.no_color)
    logger.debug(print_system_env_info())
    try:
        cfg = load_config(args.config, config_overrides(args))
        if cfg.verbose and not args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        return COMMANDS[args.command](cfg)
    except (UsageError, OracleSizeError) as e:
        logger.error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
