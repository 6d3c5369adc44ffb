# -*- coding: utf-8 -*-
"""Command line interface of the Hilbert space reduction."""

import argparse
import logging
import math
import sys
import time

from hsreduce import __version__
from hsreduce import basis as basis_lib
from hsreduce import config as config_lib
from hsreduce import csv_file
from hsreduce import definitions
from hsreduce import eigensolver as eigensolver_lib
from hsreduce import errors
from hsreduce import hamiltonian
from hsreduce import logger
from hsreduce import profilers
from hsreduce import reduction
from hsreduce.containers import records
from hsreduce.helpers import yaml_config_file


EXIT_SUCCESS = 0
EXIT_USAGE_ERROR = 2
EXIT_NO_REAL_ROOT_STOP = 3
EXIT_SOLVER_FAILURE = 4
EXIT_IO_FAILURE = 5

# p(1) in percent below which a dimension counts as stable in a comparison.
STABLE_DEVIATION = 1.0

_NUMBER_OF_COLUMN_LEVELS = 4

_CONFIG_FIELD_NAMES = (
    'boundary', 'dense_threshold', 'epsilon', 'instability_threshold', 'jc',
    'jl', 'jt', 'length', 'min_dim', 'ordering', 'out', 'patience',
    'reorder_policy', 'representation', 'seed', 'strict', 'tol', 'track')


class ComparisonReport(object):
  """Side-by-side comparison of the SU(2) and SO(4) trajectories.

  Attributes:
    deepest_stable_so4 (int): smallest dimension down to which p(1) stays
        below 1% in the SO(4) representation.
    deepest_stable_su2 (int): smallest dimension down to which p(1) stays
        below 1% in the SU(2) representation.
    rows (list[ComparisonRow]): rows, one per dimension reached by both
        trajectories, in descending dimension.
    trajectory_so4 (ReductionTrajectory): SO(4) trajectory.
    trajectory_su2 (ReductionTrajectory): SU(2) trajectory.
  """

  def __init__(self, trajectory_su2, trajectory_so4, rows):
    """Initializes a comparison report.

    Args:
      trajectory_su2 (ReductionTrajectory): SU(2) trajectory.
      trajectory_so4 (ReductionTrajectory): SO(4) trajectory.
      rows (list[ComparisonRow]): rows.
    """
    super(ComparisonReport, self).__init__()
    self.deepest_stable_so4 = GetDeepestStableDimension(trajectory_so4)
    self.deepest_stable_su2 = GetDeepestStableDimension(trajectory_su2)
    self.rows = rows
    self.trajectory_so4 = trajectory_so4
    self.trajectory_su2 = trajectory_su2

  def GetSummary(self):
    """Retrieves a textual summary.

    Returns:
      str: summary.
    """
    return (
        f'Deepest dimension with p(1) < {STABLE_DEVIATION:.0f}%: '
        f'su2: {self.deepest_stable_su2:d}, so4: {self.deepest_stable_so4:d}')


def _GetLevelValue(values, level):
  """Retrieves the value of a level, NaN if the level is not available."""
  if level < len(values):
    return float(values[level])
  return math.nan


def GetDeepestStableDimension(trajectory, threshold=STABLE_DEVIATION):
  """Determines down to which dimension p(1) stays below a threshold.

  Args:
    trajectory (ReductionTrajectory): trajectory.
    threshold (Optional[float]): p(1) threshold in percent.

  Returns:
    int: smallest dimension n such that p(1) < threshold for every step from
        the full space down to n.
  """
  deepest_dimension = trajectory.initial_dimension
  for step in trajectory.steps:
    if not step.observables.deviations[0] < threshold:
      break

    deepest_dimension = step.dimension

  return deepest_dimension


def ConvertStepToRow(step):
  """Converts a reduction step into a trajectory row.

  Args:
    step (ReductionStep): reduction step.

  Returns:
    TrajectoryRow: trajectory row.
  """
  observables = step.observables

  row = records.TrajectoryRow()
  row.step = step.step
  row.n = step.dimension
  row.g = step.g_after

  for level in range(_NUMBER_OF_COLUMN_LEVELS):
    setattr(row, f'lambda{level + 1:d}', _GetLevelValue(
        step.eigenvalues, level))
    setattr(row, f'e{level + 1:d}', _GetLevelValue(
        observables.energies_per_site, level))
    setattr(row, f'p{level + 1:d}', _GetLevelValue(
        observables.deviations, level))

  row.entropy = observables.entropy_per_site
  row.relevant = observables.relevant_count
  row.irrelevant = observables.irrelevant_count
  row.dropped_amp = step.dropped_amplitude
  row.root_status = step.root_status
  row.eliminated_index = step.eliminated_index
  return row


def WriteRecords(container_type, containers, path):
  """Writes record containers to a CSV file.

  Args:
    container_type (str): type of the record containers.
    containers (list[RecordContainer]): record containers.
    path (str): path of the CSV file.

  Raises:
    IOError: if the file cannot be written.
    OSError: if the file cannot be written.
  """
  writer = csv_file.CSVRecordWriter(container_type)
  writer.Open(path=path)
  try:
    for container in containers:
      writer.WriteRecord(container)
  finally:
    writer.Close()


def WriteTrajectory(trajectory, path):
  """Writes a trajectory CSV file with one row per step.

  Args:
    trajectory (ReductionTrajectory): trajectory.
    path (str): path of the CSV file.

  Raises:
    IOError: if the file cannot be written.
    OSError: if the file cannot be written.
  """
  WriteRecords(
      records.TrajectoryRow.CONTAINER_TYPE,
      [ConvertStepToRow(step) for step in trajectory.steps], path)


def BuildHamiltonian(config):
  """Builds the basis and Hamiltonian pair of a configuration.

  Args:
    config (RunConfig): run configuration.

  Returns:
    tuple[Basis, HamiltonianPair]: basis in enumeration order and Hamiltonian
        pair.
  """
  couplings = config.GetCouplingSet()
  if config.representation == definitions.REPRESENTATION_SO4:
    basis = basis_lib.EnumerateSO4(config.length)
    ham = hamiltonian.BuildSO4(basis, couplings)
  else:
    basis = basis_lib.EnumerateSU2(config.length)
    ham = hamiltonian.BuildSU2(basis, couplings)

  return basis, ham


def RunTrajectory(config, profiler=None):
  """Runs the reduction of a configuration.

  Args:
    config (RunConfig): validated run configuration.
    profiler (Optional[EigensolverProfiler]): eigensolver profiler.

  Returns:
    ReductionTrajectory: trajectory.

  Raises:
    ReductionError: if a reduction step fails.
  """
  basis, ham = BuildHamiltonian(config)

  eigensolver = eigensolver_lib.Eigensolver(
      dense_threshold=config.dense_threshold, tolerance=config.tol,
      seed=config.seed)
  if profiler:
    eigensolver.SetProfiler(profiler)

  reducer = reduction.HilbertSpaceReducer(
      eigensolver=eigensolver, config=config.GetReductionConfig())

  logger.info((
      f'Reducing L: {config.length:d} {config.representation:s} basis of '
      f'dimension: {len(basis):d}'))

  return reducer.RunReduction(ham, basis, config.jt)


def Run(config, profilers_path=None):
  """Runs the reduction of a configuration and writes the trajectory CSV.

  On a reduction failure the steps recorded so far are written.

  Args:
    config (RunConfig): run configuration.
    profilers_path (Optional[str]): path of the directory of the eigensolver
        profiler sample file, where None disables profiling.

  Returns:
    int: exit code.
  """
  try:
    config.Validate()
  except errors.ConfigurationError as exception:
    logger.error(f'Invalid configuration: {exception!s}')
    return EXIT_USAGE_ERROR

  profiler = None
  if profilers_path:
    identifier = time.strftime('%Y%m%d-%H%M%S')
    profiler = profilers.EigensolverProfiler(identifier, profilers_path)

  exit_code = EXIT_SUCCESS
  trajectory = None
  try:
    if profiler:
      profiler.Start()

    try:
      trajectory = RunTrajectory(config, profiler=profiler)

    except errors.ReductionError as exception:
      logger.error(f'Reduction failed: {exception!s}')
      trajectory = exception.trajectory
      exit_code = EXIT_SOLVER_FAILURE

    finally:
      if profiler:
        profiler.Stop()

    if trajectory:
      WriteTrajectory(trajectory, config.out)

  except (IOError, OSError) as exception:
    logger.error(f'Unable to write output with error: {exception!s}')
    return EXIT_IO_FAILURE

  if (exit_code == EXIT_SUCCESS and trajectory.termination_reason ==
      definitions.TERMINATION_NO_REAL_ROOT_STOP):
    exit_code = EXIT_NO_REAL_ROOT_STOP

  return exit_code


def CompareRepresentations(config_su2, config_so4):
  """Runs the SU(2) and SO(4) trajectories side by side.

  The trajectories run one after the other so that the result does not depend
  on scheduling.

  Args:
    config_su2 (RunConfig): configuration of the SU(2) run.
    config_so4 (RunConfig): configuration of the SO(4) run.

  Returns:
    ComparisonReport: comparison report.

  Raises:
    ConfigurationError: if a configuration is invalid.
    ReductionError: if a reduction step fails.
    RepresentationError: if the representations are not SU(2) and SO(4) or
        the configurations do not share the ladder length and couplings.
  """
  if config_su2.representation != definitions.REPRESENTATION_SU2:
    raise errors.RepresentationError(
        f'Unsupported representation: {config_su2.representation:s}, su2 '
        f'required.')

  if config_so4.representation != definitions.REPRESENTATION_SO4:
    raise errors.RepresentationError(
        f'Unsupported representation: {config_so4.representation:s}, so4 '
        f'required.')

  for field_name in ('boundary', 'length', 'jt', 'jl', 'jc'):
    value_su2 = getattr(config_su2, field_name)
    value_so4 = getattr(config_so4, field_name)
    if value_su2 != value_so4:
      raise errors.RepresentationError((
          f'Mismatch in {field_name:s}: {value_su2!s} (su2) and '
          f'{value_so4!s} (so4)'))

  config_su2.Validate()
  config_so4.Validate()

  trajectory_su2 = RunTrajectory(config_su2)
  trajectory_so4 = RunTrajectory(config_so4)

  steps_so4 = {step.dimension: step for step in trajectory_so4.steps}

  rows = []
  for step_su2 in trajectory_su2.steps:
    step_so4 = steps_so4.get(step_su2.dimension, None)
    if not step_so4:
      continue

    observables_su2 = step_su2.observables
    observables_so4 = step_so4.observables

    row = records.ComparisonRow()
    row.n = step_su2.dimension
    row.p1_su2 = float(observables_su2.deviations[0])
    row.p1_so4 = float(observables_so4.deviations[0])
    row.s_su2 = observables_su2.entropy_per_site
    row.s_so4 = observables_so4.entropy_per_site
    row.relevant_su2 = observables_su2.relevant_count
    row.irrelevant_su2 = observables_su2.irrelevant_count
    row.relevant_so4 = observables_so4.relevant_count
    row.irrelevant_so4 = observables_so4.irrelevant_count
    row.relevant_difference_su2 = observables_su2.relevant_difference
    row.relevant_difference_so4 = observables_so4.relevant_difference
    rows.append(row)

  return ComparisonReport(trajectory_su2, trajectory_so4, rows)


def _AddConfigurationArguments(argument_parser):
  """Adds the run configuration arguments to an argument parser.

  Defaults are None so that only flags given on the command line override the
  other configuration layers.

  Args:
    argument_parser (argparse.ArgumentParser): argument parser.
  """
  argument_parser.add_argument(
      '--preset', dest='preset', type=str, action='store', default=None,
      metavar='NAME', help='name of a configuration preset.')

  argument_parser.add_argument(
      '--config', dest='config', type=str, action='store', default=None,
      metavar='PATH', help='path of a YAML run configuration file.')

  argument_parser.add_argument(
      '--length', dest='length', type=int, action='store', default=None,
      metavar='L', help='ladder length L, the number of rungs.')

  argument_parser.add_argument(
      '--representation', dest='representation', type=str, action='store',
      default=None, choices=sorted(definitions.REPRESENTATIONS),
      help='representation of the basis.')

  for flag, name in (
      ('--jt', 'rung coupling J_t'), ('--jl', 'leg coupling J_l'),
      ('--jc', 'diagonal coupling J_c')):
    argument_parser.add_argument(
        flag, dest=flag[2:], type=float, action='store', default=None,
        metavar='VALUE', help=f'{name:s}.')

  argument_parser.add_argument(
      '--boundary', dest='boundary', type=str, action='store', default=None,
      choices=sorted(definitions.BOUNDARIES),
      help='boundary condition along the legs.')

  argument_parser.add_argument(
      '--ordering', dest='ordering', type=str, action='store', default=None,
      choices=sorted(definitions.ORDERING_STRATEGIES),
      help='ordering strategy of the basis.')

  argument_parser.add_argument(
      '--reorder-policy', dest='reorder_policy', type=str, action='store',
      default=None, choices=sorted(definitions.REORDER_POLICIES),
      help='order the basis once or after every step.')

  argument_parser.add_argument(
      '--epsilon', dest='epsilon', type=float, action='store', default=None,
      metavar='VALUE', help='relevance threshold of the amplitudes.')

  argument_parser.add_argument(
      '--min-dim', dest='min_dim', type=int, action='store', default=None,
      metavar='N', help='dimension at which the reduction stops.')

  argument_parser.add_argument(
      '--instability-threshold', dest='instability_threshold', type=float,
      action='store', default=None, metavar='PERCENT',
      help='p(1) in percent above which a step is unstable.')

  argument_parser.add_argument(
      '--patience', dest='patience', type=int, action='store', default=None,
      metavar='STEPS',
      help='number of consecutive unstable steps that stop the reduction.')

  argument_parser.add_argument(
      '--track', dest='track', type=int, action='store', default=None,
      metavar='K', help='number of tracked eigenvalues.')

  argument_parser.add_argument(
      '--dense-threshold', dest='dense_threshold', type=int, action='store',
      default=None, metavar='N',
      help='largest dimension that is diagonalized densely.')

  argument_parser.add_argument(
      '--tol', dest='tol', type=float, action='store', default=None,
      metavar='VALUE', help='residual tolerance of the eigensolver.')

  argument_parser.add_argument(
      '--seed', dest='seed', type=int, action='store', default=None,
      metavar='SEED', help='seed of the Lanczos start vector.')

  argument_parser.add_argument(
      '--out', dest='out', type=str, action='store', default=None,
      metavar='PATH', help='path of the output file.')

  argument_parser.add_argument(
      '--strict', dest='strict', action='store_true', default=None,
      help='stop the reduction on a step without real root.')


def GetArgumentParser():
  """Retrieves the argument parser.

  Returns:
    argparse.ArgumentParser: argument parser.
  """
  argument_parser = argparse.ArgumentParser(
      prog='hsreduce', description=(
          'Hilbert space reduction of frustrated two-leg spin ladders.'))

  argument_parser.add_argument(
      '-V', '--version', action='version', version=f'%(prog)s {__version__:s}')

  argument_parser.add_argument(
      '--debug', dest='debug', action='store_true', default=False,
      help='enable debug output.')

  argument_parser.add_argument(
      '-q', '--quiet', dest='quiet', action='store_true', default=False,
      help='only output warnings and errors.')

  subparsers = argument_parser.add_subparsers(dest='command', required=True)

  run_parser = subparsers.add_parser(
      'run', help='run a reduction and write the trajectory CSV.')
  _AddConfigurationArguments(run_parser)
  run_parser.add_argument(
      '--profilers-path', dest='profilers_path', type=str, action='store',
      default=None, metavar='PATH',
      help='path of the directory to write eigensolver profiles to.')

  compare_parser = subparsers.add_parser(
      'compare', help=(
          'run the SU(2) and SO(4) reductions and write the comparison CSV.'))
  _AddConfigurationArguments(compare_parser)

  dump_parser = subparsers.add_parser(
      'dump', help='write the nonzero elements of H1.')
  _AddConfigurationArguments(dump_parser)

  return argument_parser


def BuildRunConfig(options, environment=None, presets_path=None):
  """Builds a run configuration from the configuration layers.

  The layers, lowest precedence first, are: the defaults, the preset, the
  configuration file, the environment variables and the command line flags.

  Args:
    options (argparse.Namespace): command line options.
    environment (Optional[dict[str, str]]): environment variables, where None
        represents os.environ.
    presets_path (Optional[str]): path of the presets file, where None
        represents the presets file that comes with the package.

  Returns:
    RunConfig: run configuration, not yet validated.

  Raises:
    ConfigurationError: if the preset is not defined or a value is invalid.
    ParseError: if the configuration or presets file cannot be parsed.
  """
  config = config_lib.RunConfig()

  preset_name = getattr(options, 'preset', None)
  if preset_name:
    presets = yaml_config_file.ReadPresets(path=presets_path)
    preset = presets.get(preset_name, None)
    if not preset:
      raise errors.ConfigurationError(
          'preset', f'undefined preset: {preset_name:s}')

    config.CopyFromDict(preset.values)

  config_path = getattr(options, 'config', None)
  if config_path:
    config_file = yaml_config_file.YAMLRunConfigFile()
    config.CopyFromDict(config_file.ReadFromFile(config_path))

  config.CopyFromEnvironment(environment=environment)

  config.CopyFromDict({
      field_name: getattr(options, field_name, None)
      for field_name in _CONFIG_FIELD_NAMES})

  return config


def _ConfigureLogging(debug=False, quiet=False):
  """Configures the logging root logger.

  Args:
    debug (Optional[bool]): True to log debug messages.
    quiet (Optional[bool]): True to log warnings and errors only.
  """
  if debug:
    level = logging.DEBUG
  elif quiet:
    level = logging.WARNING
  else:
    level = logging.INFO

  logging.basicConfig(
      level=level, format='[%(levelname)s] %(message)s', stream=sys.stderr)


def _Compare(config):
  """Runs the compare command.

  Args:
    config (RunConfig): run configuration, the representation is ignored.

  Returns:
    int: exit code.
  """
  config_su2 = config_lib.RunConfig()
  config_su2.CopyFromDict(config.CopyToDict())
  config_su2.representation = definitions.REPRESENTATION_SU2

  config_so4 = config_lib.RunConfig()
  config_so4.CopyFromDict(config.CopyToDict())
  config_so4.representation = definitions.REPRESENTATION_SO4

  try:
    report = CompareRepresentations(config_su2, config_so4)
  except errors.ConfigurationError as exception:
    logger.error(f'Invalid configuration: {exception!s}')
    return EXIT_USAGE_ERROR
  except errors.ReductionError as exception:
    logger.error(f'Reduction failed: {exception!s}')
    return EXIT_SOLVER_FAILURE

  try:
    WriteRecords(records.ComparisonRow.CONTAINER_TYPE, report.rows, config.out)
  except (IOError, OSError) as exception:
    logger.error(f'Unable to write output with error: {exception!s}')
    return EXIT_IO_FAILURE

  print(report.GetSummary())
  return EXIT_SUCCESS


def _Dump(config):
  """Runs the dump command.

  Args:
    config (RunConfig): run configuration.

  Returns:
    int: exit code.
  """
  try:
    config.Validate()
  except errors.ConfigurationError as exception:
    logger.error(f'Invalid configuration: {exception!s}')
    return EXIT_USAGE_ERROR

  _, ham = BuildHamiltonian(config)

  try:
    with open(config.out, 'w', encoding='utf-8', newline='') as file_object:
      hamiltonian.WriteMatrix(ham.h1, file_object)
  except (IOError, OSError) as exception:
    logger.error(f'Unable to write output with error: {exception!s}')
    return EXIT_IO_FAILURE

  return EXIT_SUCCESS


def Main(arguments=None, environment=None):
  """The main program function.

  Args:
    arguments (Optional[list[str]]): command line arguments, where None
        represents sys.argv.
    environment (Optional[dict[str, str]]): environment variables, where None
        represents os.environ.

  Returns:
    int: exit code.
  """
  argument_parser = GetArgumentParser()

  try:
    options = argument_parser.parse_args(arguments)
  except SystemExit as exception:
    return exception.code

  _ConfigureLogging(debug=options.debug, quiet=options.quiet)

  try:
    config = BuildRunConfig(options, environment=environment)
  except (errors.ConfigurationError, errors.ParseError) as exception:
    logger.error(f'Invalid configuration: {exception!s}')
    return EXIT_USAGE_ERROR
  except (IOError, OSError) as exception:
    logger.error(f'Unable to read configuration with error: {exception!s}')
    return EXIT_IO_FAILURE

  if options.command == 'compare':
    return _Compare(config)

  if options.command == 'dump':
    return _Dump(config)

  return Run(config, profilers_path=options.profilers_path)


if __name__ == '__main__':
  sys.exit(Main())
