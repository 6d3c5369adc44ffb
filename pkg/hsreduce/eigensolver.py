# -*- coding: utf-8 -*-
"""Lowest eigenpairs of H = H0 + g H1."""

import numpy
from scipy import linalg

from hsreduce import definitions
from hsreduce import errors
from hsreduce import logger


class EigenResult(object):
  """Lowest eigenpairs of a Hamiltonian.

  Attributes:
    eigenvalues (numpy.ndarray): eigenvalues in ascending order.
    eigenvectors (numpy.ndarray): orthonormal eigenvectors, one per column.
    iterations (int): number of Lanczos iterations, 0 for the dense method.
    method (str): method used, either dense or lanczos.
    residuals (numpy.ndarray): norm of H x - lambda x per pair.
  """

  def __init__(
      self, eigenvalues, eigenvectors, residuals, iterations=0,
      method=definitions.EIGENSOLVER_METHOD_DENSE):
    """Initializes an eigen result.

    Args:
      eigenvalues (numpy.ndarray): eigenvalues in ascending order.
      eigenvectors (numpy.ndarray): eigenvectors, one per column.
      residuals (numpy.ndarray): residual norms.
      iterations (Optional[int]): number of Lanczos iterations.
      method (Optional[str]): method used.
    """
    super(EigenResult, self).__init__()
    self.eigenvalues = eigenvalues
    self.eigenvectors = eigenvectors
    self.iterations = iterations
    self.method = method
    self.residuals = residuals

  @property
  def number_of_pairs(self):
    """int: number of eigenpairs."""
    return self.eigenvalues.size


class Eigensolver(object):
  """Lanczos eigensolver with full reorthogonalization and a dense fallback.

  Attributes:
    dense_threshold (int): largest dimension diagonalized densely.
    maximum_iterations (int): maximum number of Lanczos iterations, where None
        represents 1000. Never more than the dimension of the matrix.
    seed (int): seed of the start vector.
    tolerance (float): maximum residual norm of a converged pair.
  """

  _CHECK_INTERVAL = 10

  _DEFAULT_MAXIMUM_ITERATIONS = 1000

  # Relative size of an off-diagonal element of the tridiagonal matrix below
  # which the Krylov space is invariant.
  _INVARIANT_SUBSPACE_TOLERANCE = 1e-12

  def __init__(
      self, dense_threshold=256, tolerance=1e-9, seed=0,
      maximum_iterations=None):
    """Initializes an eigensolver.

    Args:
      dense_threshold (Optional[int]): largest dimension diagonalized densely.
      tolerance (Optional[float]): maximum residual norm of a converged pair.
      seed (Optional[int]): seed of the start vector.
      maximum_iterations (Optional[int]): maximum number of Lanczos
          iterations.

    Raises:
      ValueError: if the tolerance is not positive.
    """
    if tolerance <= 0.0:
      raise ValueError(f'Unsupported tolerance: {tolerance!s}')

    super(Eigensolver, self).__init__()
    self._profiler = None
    self.dense_threshold = dense_threshold
    self.maximum_iterations = maximum_iterations
    self.seed = seed
    self.tolerance = tolerance

  def _GetResiduals(self, matrix, eigenvalues, eigenvectors):
    """Computes the residual norms of eigenpairs.

    Args:
      matrix (scipy.sparse.csr_matrix): Hamiltonian matrix.
      eigenvalues (numpy.ndarray): eigenvalues.
      eigenvectors (numpy.ndarray): eigenvectors, one per column.

    Returns:
      numpy.ndarray: norm of H x - lambda x per pair.
    """
    products = matrix @ eigenvectors
    return numpy.linalg.norm(products - eigenvectors * eigenvalues, axis=0)

  def _SolveDense(self, matrix, number_of_pairs):
    """Diagonalizes densely.

    Args:
      matrix (scipy.sparse.csr_matrix): Hamiltonian matrix.
      number_of_pairs (int): number of lowest eigenpairs.

    Returns:
      EigenResult: lowest eigenpairs.
    """
    eigenvalues, eigenvectors = linalg.eigh(
        matrix.toarray(), subset_by_index=[0, number_of_pairs - 1])
    residuals = self._GetResiduals(matrix, eigenvalues, eigenvectors)
    return EigenResult(
        eigenvalues, eigenvectors, residuals, iterations=0,
        method=definitions.EIGENSOLVER_METHOD_DENSE)

  def _SolveLanczos(self, matrix, number_of_pairs):
    """Runs Lanczos iterations with full reorthogonalization.

    Args:
      matrix (scipy.sparse.csr_matrix): Hamiltonian matrix.
      number_of_pairs (int): number of lowest eigenpairs.

    Returns:
      EigenResult: lowest eigenpairs.

    Raises:
      ConvergenceError: if the pairs do not converge within the maximum
          number of iterations.
    """
    dimension = matrix.shape[0]
    maximum_iterations = min(
        self.maximum_iterations or self._DEFAULT_MAXIMUM_ITERATIONS, dimension)
    random_generator = numpy.random.default_rng(self.seed)

    krylov_vectors = numpy.zeros((dimension, maximum_iterations))
    alphas = numpy.zeros(maximum_iterations)
    betas = numpy.zeros(maximum_iterations)

    vector = random_generator.standard_normal(dimension)
    vector /= numpy.linalg.norm(vector)

    best_residuals = None
    for iteration in range(maximum_iterations):
      krylov_vectors[:, iteration] = vector

      product = matrix @ vector
      alphas[iteration] = vector @ product

      product -= krylov_vectors[:, :iteration + 1] @ (
          krylov_vectors[:, :iteration + 1].T @ product)
      # Second pass keeps the Krylov vectors orthonormal to working precision.
      product -= krylov_vectors[:, :iteration + 1] @ (
          krylov_vectors[:, :iteration + 1].T @ product)

      beta = numpy.linalg.norm(product)
      number_of_iterations = iteration + 1

      last_iteration = number_of_iterations == maximum_iterations
      if (number_of_iterations >= number_of_pairs and (
          last_iteration or number_of_iterations % self._CHECK_INTERVAL == 0)):
        result = self._GetRitzPairs(
            matrix, krylov_vectors[:, :number_of_iterations],
            alphas[:number_of_iterations], betas[:number_of_iterations - 1],
            number_of_pairs, number_of_iterations)

        if best_residuals is None or (
            result.residuals.max() < best_residuals.max()):
          best_residuals = result.residuals

        if result.residuals.max() <= self.tolerance:
          return result

      if last_iteration:
        break

      scale = max(abs(alphas[iteration]), 1.0)
      if beta <= self._INVARIANT_SUBSPACE_TOLERANCE * scale:
        # The Krylov space is invariant, continue with a fresh direction
        # orthogonal to it, so that degenerate levels are found as well.
        vector = random_generator.standard_normal(dimension)
        for _ in range(2):
          vector -= krylov_vectors[:, :iteration + 1] @ (
              krylov_vectors[:, :iteration + 1].T @ vector)
        vector /= numpy.linalg.norm(vector)
        betas[iteration] = 0.0

      else:
        vector = product / beta
        betas[iteration] = beta

    raise errors.ConvergenceError((
        f'Lanczos did not converge in {maximum_iterations:d} iterations for '
        f'dimension: {dimension:d}'), residuals=best_residuals)

  def _GetRitzPairs(
      self, matrix, krylov_vectors, alphas, betas, number_of_pairs,
      iterations):
    """Computes Ritz pairs from the tridiagonal Lanczos matrix.

    Args:
      matrix (scipy.sparse.csr_matrix): Hamiltonian matrix.
      krylov_vectors (numpy.ndarray): orthonormal Krylov vectors as columns.
      alphas (numpy.ndarray): diagonal of the tridiagonal matrix.
      betas (numpy.ndarray): off-diagonal of the tridiagonal matrix.
      number_of_pairs (int): number of lowest pairs.
      iterations (int): number of Lanczos iterations performed.

    Returns:
      EigenResult: lowest Ritz pairs.
    """
    eigenvalues, tridiagonal_vectors = linalg.eigh_tridiagonal(
        alphas, betas, select='i', select_range=(0, number_of_pairs - 1))

    eigenvectors = krylov_vectors @ tridiagonal_vectors
    eigenvectors /= numpy.linalg.norm(eigenvectors, axis=0)

    residuals = self._GetResiduals(matrix, eigenvalues, eigenvectors)
    return EigenResult(
        eigenvalues, eigenvectors, residuals, iterations=iterations,
        method=definitions.EIGENSOLVER_METHOD_LANCZOS)

  def LowestEigenpairs(self, ham, g, number_of_pairs):
    """Computes the lowest eigenpairs of H0 + g H1.

    Args:
      ham (HamiltonianPair): Hamiltonian pair.
      g (float): coupling strength.
      number_of_pairs (int): number of lowest eigenpairs k.

    Returns:
      EigenResult: the k algebraically smallest eigenpairs.

    Raises:
      ConvergenceError: if Lanczos does not converge.
      ValueError: if the number of pairs is out of range.
    """
    if not 1 <= number_of_pairs <= ham.dim:
      raise ValueError((
          f'Unsupported number of pairs: {number_of_pairs!s} for dimension: '
          f'{ham.dim:d}'))

    matrix = ham.GetMatrix(g)

    if self._profiler:
      self._profiler.StartTiming('eigensolver')

    try:
      if ham.dim <= self.dense_threshold:
        result = self._SolveDense(matrix, number_of_pairs)
      else:
        result = self._SolveLanczos(matrix, number_of_pairs)

    finally:
      if self._profiler:
        self._profiler.StopTiming('eigensolver')

    if self._profiler:
      self._profiler.Sample(
          'eigensolver', result.method, ham.dim, result.iterations)

    if number_of_pairs > 1:
      gap = result.eigenvalues[1] - result.eigenvalues[0]
      if gap <= self.tolerance * max(abs(result.eigenvalues[0]), 1.0):
        logger.info((
            f'Degenerate ground state at dimension: {ham.dim:d}, gap: '
            f'{gap:.3e}'))

    return result

  def SetProfiler(self, profiler):
    """Sets the eigensolver profiler.

    Args:
      profiler (EigensolverProfiler): eigensolver profiler.
    """
    self._profiler = profiler


def GroundAmplitudes(result, basis=None):
  """Retrieves the ground state amplitudes a_1i = <Phi_i|Psi_1>.

  Args:
    result (EigenResult): eigenpairs.
    basis (Optional[Basis]): basis of the amplitudes, used to check the
        dimension.

  Returns:
    numpy.ndarray: normalized amplitudes where the amplitude of largest
        magnitude is positive.

  Raises:
    ValueError: if the result contains no eigenpair or the dimension does not
        match the basis.
  """
  if result.number_of_pairs < 1:
    raise ValueError('Missing ground state eigenpair.')

  amplitudes = numpy.array(result.eigenvectors[:, 0], dtype=float)
  if basis is not None and amplitudes.size != len(basis):
    raise ValueError((
        f'Number of amplitudes: {amplitudes.size:d} does not match basis '
        f'dimension: {len(basis):d}'))

  amplitudes /= numpy.linalg.norm(amplitudes)
  if amplitudes[numpy.argmax(numpy.abs(amplitudes))] < 0.0:
    amplitudes = -amplitudes

  return amplitudes


def LowestEigenpairs(
    ham, g, number_of_pairs, tolerance=1e-9, dense_threshold=256, seed=0):
  """Computes the lowest eigenpairs of H0 + g H1.

  Args:
    ham (HamiltonianPair): Hamiltonian pair.
    g (float): coupling strength.
    number_of_pairs (int): number of lowest eigenpairs k.
    tolerance (Optional[float]): maximum residual norm of a converged pair.
    dense_threshold (Optional[int]): largest dimension diagonalized densely.
    seed (Optional[int]): seed of the Lanczos start vector.

  Returns:
    EigenResult: the k algebraically smallest eigenpairs.
  """
  eigensolver = Eigensolver(
      dense_threshold=dense_threshold, tolerance=tolerance, seed=seed)
  return eigensolver.LowestEigenpairs(ham, g, number_of_pairs)
