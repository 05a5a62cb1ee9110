import argparse
import logging
import sys
from typing import List
from Config.Exceptions import ConfigError
from Parallelism.SweepExecutor import PointStatus, SweepExecutor
from Runner.Presets import PRESETS
from Runner.RunConfig import RunConfig
from Runner.TableWriter import TableWriter
from Config.Messages import Messages
from Utils.Logger import get_logger, set_level
from Utils.Utils import Utils

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_ALL_INFEASIBLE = 3

logger = get_logger('main')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='cvmdi-rates',
        description='Finite-size secret key rates of CV MDI QKD over a sweep of block sizes.')
    parser.add_argument('config', nargs='?', help='KEY=value run configuration file')
    parser.add_argument('--scenario', choices=sorted(PRESETS), help='attack preset, overrides PRESET')
    parser.add_argument('--sweep', help="block sizes: '1e6,1e7' or 'logspace:6:10:9'")
    parser.add_argument('--mode', choices=('simulate', 'analytic'), help='moment source')
    parser.add_argument('--analysis', choices=('collective', 'coherent', 'both'), help='attack class')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--out', help='CSV output path, - for stdout')
    parser.add_argument('--workers', type=int)
    parser.add_argument('-v', '--verbose', action='store_true')
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    overrides = {}
    if args.scenario is not None:
        overrides['PRESET'] = args.scenario
    if args.config is not None:
        config = RunConfig.from_file(args.config, overrides)
    elif args.scenario is not None:
        config = RunConfig.from_mapping(overrides)
    else:
        raise ConfigError(Messages().MISSING_FILE.format('(none given, use a file or --scenario)'))

    sweep = tuple(Utils.parse_sweep(args.sweep)) if args.sweep else None
    return config.with_overrides(sweep=sweep, mode=args.mode, analysis_mode=args.analysis,
                                 seed=args.seed, output=args.out, workers=args.workers)


def run(config: RunConfig) -> List[dict]:
    return SweepExecutor(config).run()


def main(argv: List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)

    try:
        config = load_config(args)
    except ConfigError as error:
        print(f'{error.title}: {error.message}', file=sys.stderr)
        return EXIT_CONFIG_ERROR

    table = run(config)
    try:
        if config.output == '-':
            sys.stdout.write(TableWriter.render(table))
        else:
            TableWriter.emit(table, config.output)
            logger.info(Messages().TABLE_WRITTEN.format(len(table), config.output))
    except OSError as error:
        error = ConfigError(Messages().OUTPUT_FAILED.format(config.output, error.strerror or error))
        print(f'{error.title}: {error.message}', file=sys.stderr)
        return EXIT_CONFIG_ERROR

    if all(SweepExecutor.status_of(row) is PointStatus.ABORT for row in table):
        logger.warning(Messages().ALL_ROWS_INFEASIBLE)
        return EXIT_ALL_INFEASIBLE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
