# -*- coding: utf-8 -*-
"""Stability and structure observables of a reduction step."""

import math

import numpy
from scipy import special

from hsreduce import errors


DEFAULT_EPSILON = 1e-2

_NORMALIZATION_TOLERANCE = 1e-10


class StepObservables(object):
  """Observables of one reduction step.

  Attributes:
    deviations (numpy.ndarray): percentage deviations p(i) of the energies per
        site from their full space values.
    dimension (int): dimension n of the reduced space.
    energies_per_site (numpy.ndarray): energies per site e_i = lambda_i / 2L.
    entropy_per_site (float): entropy per site s of the ground state.
    irrelevant_count (int): number of amplitudes with |a_1i| <= epsilon.
    relevant_count (int): number of amplitudes with |a_1i| > epsilon.
  """

  def __init__(
      self, dimension, energies_per_site, deviations, entropy_per_site,
      relevant_count, irrelevant_count):
    """Initializes step observables.

    Args:
      dimension (int): dimension n of the reduced space.
      energies_per_site (numpy.ndarray): energies per site.
      deviations (numpy.ndarray): percentage deviations p(i).
      entropy_per_site (float): entropy per site s.
      relevant_count (int): number of relevant amplitudes.
      irrelevant_count (int): number of irrelevant amplitudes.
    """
    super(StepObservables, self).__init__()
    self.deviations = deviations
    self.dimension = dimension
    self.energies_per_site = energies_per_site
    self.entropy_per_site = entropy_per_site
    self.irrelevant_count = irrelevant_count
    self.relevant_count = relevant_count

  @property
  def relevant_difference(self):
    """int: relevant minus irrelevant amplitude count."""
    return self.relevant_count - self.irrelevant_count


def DeviationPercentage(full_energy, reduced_energy):
  """Computes the percentage deviation p = |(e_N - e_n) / e_N| x 100.

  Args:
    full_energy (float): energy e_N in the full space.
    reduced_energy (float): energy e_n in the reduced space.

  Returns:
    float: percentage of lost accuracy.

  Raises:
    UndefinedDeviationError: if the full space energy is zero.
  """
  if full_energy == 0.0:
    raise errors.UndefinedDeviationError(
        'Deviation undefined for a zero full space energy.')

  return abs((full_energy - reduced_energy) / full_energy) * 100.0


def EntropyPerSite(amplitudes, number_of_rungs):
  """Computes the entropy per site s = -(1/2L) sum P_i ln P_i, P_i = a_i^2.

  Args:
    amplitudes (numpy.ndarray): normalized amplitudes.
    number_of_rungs (int): ladder length L.

  Returns:
    float: entropy per site.

  Raises:
    NormalizationError: if the amplitudes are not normalized.
  """
  probabilities = numpy.square(numpy.asarray(amplitudes, dtype=float))

  norm = probabilities.sum()
  if abs(norm - 1.0) > _NORMALIZATION_TOLERANCE:
    raise errors.NormalizationError(
        f'Amplitudes not normalized, sum of squares: {norm:.17g}')

  # entr(0) is 0, the limit of -P ln P.
  entropy = float(special.entr(probabilities).sum())
  return entropy / (2.0 * number_of_rungs)


def CountRelevantAmplitudes(amplitudes, epsilon=DEFAULT_EPSILON):
  """Counts relevant amplitudes, those with |a_1i| > epsilon.

  Args:
    amplitudes (numpy.ndarray): amplitudes.
    epsilon (Optional[float]): relevance threshold.

  Returns:
    tuple[int, int]: number of relevant and of irrelevant amplitudes.

  Raises:
    ValueError: if epsilon is not positive.
  """
  if epsilon <= 0.0:
    raise ValueError(f'Unsupported epsilon: {epsilon!s}')

  magnitudes = numpy.abs(numpy.asarray(amplitudes, dtype=float))
  relevant_count = int(numpy.count_nonzero(magnitudes > epsilon))
  return relevant_count, magnitudes.size - relevant_count


def ComputeStepObservables(
    eigenvalues, amplitudes, full_energies_per_site, number_of_rungs,
    epsilon=DEFAULT_EPSILON):
  """Computes the observables of a reduction step.

  Levels without an eigenvalue, because the reduced space is smaller than the
  number of tracked levels, are NaN.

  Args:
    eigenvalues (numpy.ndarray): lowest eigenvalues in the reduced space.
    amplitudes (numpy.ndarray): normalized ground state amplitudes.
    full_energies_per_site (numpy.ndarray): energies per site in the full
        space, one per tracked level.
    number_of_rungs (int): ladder length L.
    epsilon (Optional[float]): relevance threshold.

  Returns:
    StepObservables: observables.
  """
  number_of_sites = 2 * number_of_rungs
  number_of_levels = len(full_energies_per_site)

  energies_per_site = numpy.full(number_of_levels, math.nan)
  deviations = numpy.full(number_of_levels, math.nan)
  for level, eigenvalue in enumerate(eigenvalues[:number_of_levels]):
    energies_per_site[level] = eigenvalue / number_of_sites
    deviations[level] = DeviationPercentage(
        full_energies_per_site[level], energies_per_site[level])

  relevant_count, irrelevant_count = CountRelevantAmplitudes(
      amplitudes, epsilon=epsilon)

  return StepObservables(
      len(amplitudes), energies_per_site, deviations,
      EntropyPerSite(amplitudes, number_of_rungs), relevant_count,
      irrelevant_count)
