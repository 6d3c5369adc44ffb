# -*- coding: utf-8 -*-
"""Hilbert space reduction with renormalization of the coupling strength.

Every step eliminates the last state |Phi_n> of the ordered basis and changes
the coupling g so that the full space ground state energy lambda_1 remains an
eigenvalue of the effective problem in the reduced space. The new coupling is
a root of a * g^2 + b * g + c = 0 with

  F_1n = sum_{i != n} a_1i <Phi_1|H1|Phi_i>
  G_1n = H_1n sum_{i != n} a_1i <Phi_n|H1|Phi_i>
  a = G_1n - H_nn F_1n
  b = a_11 H_nn (lambda_1 - alpha_1) + F_1n (lambda_1 - alpha_n)
  c = -a_11 (lambda_1 - alpha_1) (lambda_1 - alpha_n)

where H_ij = <Phi_i|H1|Phi_j> and alpha_i = <Phi_i|H0|Phi_i>.

The equation follows from the row of |Phi_1> in the eigenvalue problem. When
a_11 vanishes that row carries no information and the kept state with the
largest ground state amplitude takes the place of |Phi_1>.
"""

import math

import numpy

from hsreduce import basis as basis_lib
from hsreduce import definitions
from hsreduce import eigensolver as eigensolver_lib
from hsreduce import errors
from hsreduce import hamiltonian
from hsreduce import logger
from hsreduce import observables as observables_lib


# Ground state amplitude below which the first state cannot serve as the
# reference of the renormalization equation.
REFERENCE_AMPLITUDE_CUTOFF = 1e-8


class QuadraticCoefficients(object):
  """Coefficients of the renormalization equation a g^2 + b g + c = 0.

  Attributes:
    a (float): coefficient of g^2.
    a_11 (float): ground state amplitude of the reference state |Phi_1>.
    alpha_1 (float): <Phi_1|H0|Phi_1>.
    alpha_n (float): <Phi_n|H0|Phi_n>.
    b (float): coefficient of g.
    c (float): constant coefficient.
    f_1n (float): F_1n.
    g_1n (float): G_1n.
    h_1n (float): <Phi_1|H1|Phi_n>.
    h_nn (float): <Phi_n|H1|Phi_n>.
  """

  def __init__(
      self, a, b, c, f_1n=0.0, g_1n=0.0, h_nn=0.0, h_1n=0.0, alpha_1=0.0,
      alpha_n=0.0, a_11=0.0):
    """Initializes quadratic coefficients.

    Args:
      a (float): coefficient of g^2.
      b (float): coefficient of g.
      c (float): constant coefficient.
      f_1n (Optional[float]): F_1n.
      g_1n (Optional[float]): G_1n.
      h_nn (Optional[float]): <Phi_n|H1|Phi_n>.
      h_1n (Optional[float]): <Phi_1|H1|Phi_n>.
      alpha_1 (Optional[float]): <Phi_1|H0|Phi_1>.
      alpha_n (Optional[float]): <Phi_n|H0|Phi_n>.
      a_11 (Optional[float]): ground state amplitude of the first state.
    """
    super(QuadraticCoefficients, self).__init__()
    self.a = a
    self.a_11 = a_11
    self.alpha_1 = alpha_1
    self.alpha_n = alpha_n
    self.b = b
    self.c = c
    self.f_1n = f_1n
    self.g_1n = g_1n
    self.h_1n = h_1n
    self.h_nn = h_nn

  def Evaluate(self, g):
    """Evaluates a g^2 + b g + c.

    Args:
      g (float): coupling strength.

    Returns:
      float: value of the quadratic.
    """
    return (self.a * g + self.b) * g + self.c


class ReductionConfig(object):
  """Configuration of a reduction run.

  Attributes:
    epsilon (float): relevance threshold of the ground state amplitudes.
    instability_threshold (float): p(1) in percent above which a step is
        unstable.
    minimum_dimension (int): dimension N_min at which the reduction stops.
    number_of_tracked (int): number of tracked eigenvalues k.
    ordering (str): ordering strategy, either diagonal_ascending or
        amplitude_descending.
    patience (int): number of consecutive unstable steps that stop the
        reduction.
    reorder_policy (str): reorder policy, either order_once or
        reorder_each_step.
    strict (bool): True if a step without real root stops the reduction.
  """

  def __init__(
      self, ordering=definitions.ORDERING_DIAGONAL_ASCENDING,
      reorder_policy=definitions.REORDER_ONCE, minimum_dimension=8,
      number_of_tracked=4, instability_threshold=10.0, patience=5,
      strict=False, epsilon=observables_lib.DEFAULT_EPSILON):
    """Initializes a reduction configuration.

    Args:
      ordering (Optional[str]): ordering strategy.
      reorder_policy (Optional[str]): reorder policy.
      minimum_dimension (Optional[int]): dimension N_min.
      number_of_tracked (Optional[int]): number of tracked eigenvalues.
      instability_threshold (Optional[float]): p(1) threshold in percent.
      patience (Optional[int]): consecutive unstable steps that stop.
      strict (Optional[bool]): True to stop on a step without real root.
      epsilon (Optional[float]): relevance threshold.
    """
    super(ReductionConfig, self).__init__()
    self.epsilon = epsilon
    self.instability_threshold = instability_threshold
    self.minimum_dimension = minimum_dimension
    self.number_of_tracked = number_of_tracked
    self.ordering = ordering
    self.patience = patience
    self.reorder_policy = reorder_policy
    self.strict = strict


class ReductionStep(object):
  """Record of one reduction step.

  Attributes:
    coefficients (QuadraticCoefficients): coefficients of the renormalization
        equation, None for step 0.
    dimension (int): dimension n after the step.
    dropped_amplitude (float): |a_1n| of the eliminated state.
    eigenvalues (numpy.ndarray): lowest eigenvalues after the step.
    eliminated_index (int): enumeration index of the eliminated state, -1 for
        step 0.
    g_after (float): coupling strength after the step.
    g_before (float): coupling strength before the step.
    observables (StepObservables): observables after the step.
    root_status (str): root status of the renormalization equation.
    step (int): step index k.
  """

  def __init__(
      self, step, dimension, g_before, g_after, root_status, eliminated_index,
      eigenvalues, dropped_amplitude, observables, coefficients=None):
    """Initializes a reduction step.

    Args:
      step (int): step index k.
      dimension (int): dimension n after the step.
      g_before (float): coupling strength before the step.
      g_after (float): coupling strength after the step.
      root_status (str): root status of the renormalization equation.
      eliminated_index (int): enumeration index of the eliminated state.
      eigenvalues (numpy.ndarray): lowest eigenvalues after the step.
      dropped_amplitude (float): |a_1n| of the eliminated state.
      observables (StepObservables): observables after the step.
      coefficients (Optional[QuadraticCoefficients]): coefficients of the
          renormalization equation.
    """
    super(ReductionStep, self).__init__()
    self.coefficients = coefficients
    self.dimension = dimension
    self.dropped_amplitude = dropped_amplitude
    self.eigenvalues = eigenvalues
    self.eliminated_index = eliminated_index
    self.g_after = g_after
    self.g_before = g_before
    self.observables = observables
    self.root_status = root_status
    self.step = step


class ReductionTrajectory(object):
  """Trajectory of a reduction run.

  Attributes:
    full_eigenvalues (numpy.ndarray): tracked eigenvalues in the full space.
    initial_dimension (int): dimension N of the full space.
    number_of_rungs (int): ladder length L.
    representation (str): representation of the basis.
    steps (list[ReductionStep]): steps, starting with step 0.
    termination_reason (str): reason the reduction stopped or None if running.
  """

  def __init__(
      self, initial_dimension, lambda1, full_eigenvalues, number_of_rungs,
      representation):
    """Initializes a reduction trajectory.

    Args:
      initial_dimension (int): dimension N of the full space.
      lambda1 (float): full space ground state energy.
      full_eigenvalues (numpy.ndarray): tracked full space eigenvalues.
      number_of_rungs (int): ladder length L.
      representation (str): representation of the basis.
    """
    super(ReductionTrajectory, self).__init__()
    self._lambda1 = float(lambda1)
    self.full_eigenvalues = full_eigenvalues
    self.initial_dimension = initial_dimension
    self.number_of_rungs = number_of_rungs
    self.representation = representation
    self.steps = []
    self.termination_reason = None

  @property
  def coupling_history(self):
    """list[float]: coupling strength after every step."""
    return [step.g_after for step in self.steps]

  @property
  def lambda1(self):
    """float: fixed target ground state energy."""
    return self._lambda1

  def AddStep(self, step):
    """Adds a step.

    Args:
      step (ReductionStep): step.

    Raises:
      ValueError: if the dimension does not decrease by exactly 1.
    """
    if self.steps and step.dimension != self.steps[-1].dimension - 1:
      raise ValueError((
          f'Step dimension: {step.dimension:d} does not follow: '
          f'{self.steps[-1].dimension:d}'))

    self.steps.append(step)


def ComputeQuadraticCoefficients(ham, amplitudes, lambda1, first=0, last=None):
  """Computes the coefficients of the renormalization equation.

  Args:
    ham (HamiltonianPair): Hamiltonian pair in the current ordered basis.
    amplitudes (numpy.ndarray): normalized ground state amplitudes a_1i.
    lambda1 (float): fixed ground state energy.
    first (Optional[int]): position of Phi_1.
    last (Optional[int]): position of the state to eliminate, where None
        represents the last position.

  Returns:
    QuadraticCoefficients: coefficients.

  Raises:
    IndexError: if a position is out of range.
    ValueError: if the number of amplitudes does not match.
  """
  dimension = ham.dim
  if last is None:
    last = dimension - 1

  if not 0 <= first < dimension or not 0 <= last < dimension:
    raise IndexError(f'Positions: {first!s}, {last!s} out of range.')

  if first == last:
    raise IndexError('First and last positions coincide.')

  amplitudes = numpy.asarray(amplitudes, dtype=float)
  if amplitudes.shape != (dimension, ):
    raise ValueError((
        f'Number of amplitudes: {amplitudes.size:d} does not match dimension: '
        f'{dimension:d}'))

  first_row = ham.h1.getrow(first).toarray().ravel()
  last_row = ham.h1.getrow(last).toarray().ravel()

  kept = numpy.ones(dimension, dtype=bool)
  kept[last] = False

  h_1n = float(first_row[last])
  h_nn = float(last_row[last])
  f_1n = float(first_row[kept] @ amplitudes[kept])
  g_1n = h_1n * float(last_row[kept] @ amplitudes[kept])

  h0_diagonal = ham.h0.diagonal()
  alpha_1 = float(h0_diagonal[first])
  alpha_n = float(h0_diagonal[last])
  a_11 = float(amplitudes[first])

  shift_first = lambda1 - alpha_1
  shift_last = lambda1 - alpha_n

  return QuadraticCoefficients(
      g_1n - h_nn * f_1n,
      a_11 * h_nn * shift_first + f_1n * shift_last,
      -a_11 * (shift_first * shift_last),
      f_1n=f_1n, g_1n=g_1n, h_nn=h_nn, h_1n=h_1n, alpha_1=alpha_1,
      alpha_n=alpha_n, a_11=a_11)


def GetReferencePosition(amplitudes, last, cutoff=REFERENCE_AMPLITUDE_CUTOFF):
  """Retrieves the position of the reference state |Phi_1>.

  Args:
    amplitudes (numpy.ndarray): normalized ground state amplitudes.
    last (int): position of the state to eliminate.
    cutoff (Optional[float]): amplitude below which the first position is
        replaced.

  Returns:
    int: 0 if the first state has a ground state amplitude above the cutoff,
        otherwise the position before last with the largest amplitude.
  """
  magnitudes = numpy.abs(numpy.asarray(amplitudes, dtype=float)[:last])
  if magnitudes[0] > cutoff:
    return 0

  return int(numpy.argmax(magnitudes))


def RenormalizeCoupling(coefficients, g_current, scale=1.0):
  """Solves the renormalization equation for the new coupling strength.

  Of two real roots the one closest to the current coupling is taken, of two
  equidistant roots the larger one. Without real root the coupling is kept.

  Args:
    coefficients (QuadraticCoefficients): coefficients.
    g_current (float): current coupling strength.
    scale (Optional[float]): magnitude of c for a ground state amplitude a_11
        of 1, such as lambda_1^2 when H0 = 0. The constant coefficient counts
        as vanishing below 1e-14 times this scale.

  Returns:
    tuple[float, str]: new coupling strength and root status.

  Raises:
    DegenerateEquationError: if all coefficients vanish.
  """
  a = coefficients.a
  b = coefficients.b
  c = coefficients.c

  if abs(a) <= 1e-14 * max(abs(b), abs(c), 1.0):
    if abs(b) <= 1e-14 * max(abs(c), 1.0):
      if abs(c) <= 1e-14 * max(abs(scale), 1.0):
        raise errors.DegenerateEquationError((
            f'Degenerate renormalization equation: a={a!r}, b={b!r}, '
            f'c={c!r}'))

      return g_current, definitions.ROOT_STATUS_NO_REAL_ROOT

    return -c / b, definitions.ROOT_STATUS_ZERO_LEADING_COEFFICIENT

  discriminant = b * b - 4.0 * a * c
  if discriminant < 0.0:
    return g_current, definitions.ROOT_STATUS_NO_REAL_ROOT

  if discriminant == 0.0:
    return -b / (2.0 * a), definitions.ROOT_STATUS_ONE_REAL

  # Avoids cancellation between b and the square root.
  q = -0.5 * (b + math.copysign(math.sqrt(discriminant), b))
  first_root = q / a
  second_root = c / q

  first_distance = abs(first_root - g_current)
  second_distance = abs(second_root - g_current)
  if first_distance == second_distance:
    logger.warning((
        f'Equidistant roots: {first_root!r} and {second_root!r} from: '
        f'{g_current!r}, taking the larger one.'))
    return max(first_root, second_root), definitions.ROOT_STATUS_TWO_REAL

  if first_distance < second_distance:
    return first_root, definitions.ROOT_STATUS_TWO_REAL

  return second_root, definitions.ROOT_STATUS_TWO_REAL


class HilbertSpaceReducer(object):
  """Reduces the Hilbert space one basis state at a time."""

  def __init__(self, eigensolver=None, config=None):
    """Initializes a Hilbert space reducer.

    Args:
      eigensolver (Optional[Eigensolver]): eigensolver, where None represents
          the default eigensolver.
      config (Optional[ReductionConfig]): configuration, where None represents
          the default configuration.
    """
    super(HilbertSpaceReducer, self).__init__()
    self._config = config or ReductionConfig()
    self._eigensolver = eigensolver or eigensolver_lib.Eigensolver()

  def _Solve(self, ham, g, basis, trajectory):
    """Solves for the tracked eigenpairs.

    Args:
      ham (HamiltonianPair): Hamiltonian pair.
      g (float): coupling strength.
      basis (Basis): current basis.
      trajectory (ReductionTrajectory): trajectory so far or None.

    Returns:
      tuple[EigenResult, numpy.ndarray]: eigenpairs and ground state
          amplitudes.

    Raises:
      ReductionError: if the eigensolver does not converge.
    """
    number_of_pairs = min(self._config.number_of_tracked, ham.dim)
    try:
      result = self._eigensolver.LowestEigenpairs(ham, g, number_of_pairs)
    except errors.ConvergenceError as exception:
      raise errors.ReductionError(
          f'Eigensolver failed at dimension: {ham.dim:d}',
          trajectory=trajectory, cause=exception)

    return result, eigensolver_lib.GroundAmplitudes(result, basis)

  def _Order(self, ham, basis, g, amplitudes):
    """Orders the basis and everything expressed in it.

    Args:
      ham (HamiltonianPair): Hamiltonian pair.
      basis (Basis): current basis.
      g (float): coupling strength.
      amplitudes (numpy.ndarray): ground state amplitudes.

    Returns:
      tuple[HamiltonianPair, Basis, numpy.ndarray]: reordered Hamiltonian
          pair, basis and amplitudes.
    """
    permutation = basis_lib.GetOrderingPermutation(
        basis, ham, g, self._config.ordering, amplitudes=amplitudes)
    return (
        ham.Permute(permutation), basis.Permute(permutation),
        amplitudes[permutation])

  def RunReduction(self, ham, basis, g):
    """Runs the reduction.

    Args:
      ham (HamiltonianPair): Hamiltonian pair in the basis.
      basis (Basis): basis, in enumeration order.
      g (float): initial coupling strength g^(N).

    Returns:
      ReductionTrajectory: trajectory.

    Raises:
      ReductionError: if the eigensolver does not converge or the
          renormalization equation is degenerate, with the trajectory so far.
      ValueError: if the dimensions of the Hamiltonian and basis differ.
    """
    if ham.dim != len(basis):
      raise ValueError((
          f'Hamiltonian dimension: {ham.dim:d} does not match basis '
          f'dimension: {len(basis):d}'))

    config = self._config
    number_of_rungs = basis.number_of_rungs

    result, amplitudes = self._Solve(ham, g, basis, None)
    ham, basis, amplitudes = self._Order(ham, basis, g, amplitudes)

    trajectory = ReductionTrajectory(
        ham.dim, result.eigenvalues[0], result.eigenvalues, number_of_rungs,
        basis.representation)
    full_energies_per_site = result.eigenvalues / (2.0 * number_of_rungs)

    observables = observables_lib.ComputeStepObservables(
        result.eigenvalues, amplitudes, full_energies_per_site,
        number_of_rungs, epsilon=config.epsilon)
    trajectory.AddStep(ReductionStep(
        0, ham.dim, g, g, definitions.ROOT_STATUS_INITIAL, -1,
        result.eigenvalues, 0.0, observables))

    logger.info((
        f'Starting reduction of dimension: {ham.dim:d} with g: {g!r}, '
        f'lambda_1: {trajectory.lambda1!r}'))

    step_index = 0
    unstable_steps = 0
    equation_scale = trajectory.lambda1 ** 2
    while ham.dim > max(config.minimum_dimension, 1):
      last = ham.dim - 1
      first = GetReferencePosition(amplitudes, last)
      if first != 0:
        logger.debug((
            'Vanishing amplitude of the first state at dimension: '
            f'{ham.dim:d}, using position: {first:d} as reference'))

      coefficients = ComputeQuadraticCoefficients(
          ham, amplitudes, trajectory.lambda1, first=first, last=last)

      try:
        g_new, root_status = RenormalizeCoupling(
            coefficients, g, scale=equation_scale)
      except errors.DegenerateEquationError as exception:
        raise errors.ReductionError(
            f'Renormalization failed at dimension: {ham.dim:d}',
            trajectory=trajectory, cause=exception)

      if root_status == definitions.ROOT_STATUS_NO_REAL_ROOT:
        logger.warning((
            f'No real root at dimension: {ham.dim:d}, keeping g: {g!r}'))
        if config.strict:
          trajectory.termination_reason = (
              definitions.TERMINATION_NO_REAL_ROOT_STOP)
          break

      step_index += 1
      eliminated_index = int(basis.enumeration_indexes[last])
      dropped_amplitude = float(abs(amplitudes[last]))

      ham = hamiltonian.Restrict(ham, range(last))
      basis = basis.Truncate(last)

      result, amplitudes = self._Solve(ham, g_new, basis, trajectory)
      if config.reorder_policy == definitions.REORDER_EACH_STEP:
        ham, basis, amplitudes = self._Order(ham, basis, g_new, amplitudes)

      observables = observables_lib.ComputeStepObservables(
          result.eigenvalues, amplitudes, full_energies_per_site,
          number_of_rungs, epsilon=config.epsilon)
      trajectory.AddStep(ReductionStep(
          step_index, ham.dim, g, g_new, root_status, eliminated_index,
          result.eigenvalues, dropped_amplitude, observables,
          coefficients=coefficients))

      logger.debug((
          f'Step: {step_index:d} dimension: {ham.dim:d} g: {g_new!r} '
          f'({root_status:s}) p(1): {observables.deviations[0]:.3e}'))

      g = g_new

      if observables.deviations[0] > config.instability_threshold:
        unstable_steps += 1
      else:
        unstable_steps = 0

      if unstable_steps >= config.patience:
        trajectory.termination_reason = (
            definitions.TERMINATION_INSTABILITY_STOP)
        break

    if trajectory.termination_reason is None:
      trajectory.termination_reason = (
          definitions.TERMINATION_REACHED_MINIMUM_DIMENSION)

    logger.info((
        f'Reduction stopped at dimension: {ham.dim:d} with g: {g!r}, reason: '
        f'{trajectory.termination_reason:s}'))

    return trajectory
