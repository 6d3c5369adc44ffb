# -*- coding: utf-8 -*-
"""Bases of the M_tot = 0 subspace of a two-leg spin-1/2 ladder.

Two representations of the same subspace are supported:

* su2, product states of the 2L individual spins. A state is an integer
  bit-vector where bit 2(i-1)+(k-1) is set when the spin on rung i, leg k
  points up (m = +1/2).
* so4, product states of the L rungs, each rung coupled to a singlet or
  a triplet. A state is a tuple of L (S, M) pairs.
"""

import functools
import itertools

import numpy
import sympy
from scipy import sparse
from scipy import special
from sympy.physics.quantum import cg

from hsreduce import definitions
from hsreduce import errors


_MAXIMUM_NUMBER_OF_RUNGS = 16

# Per-rung states in enumeration order.
_RUNG_STATES = ((0, 0), (1, -1), (1, 0), (1, 1))


@functools.lru_cache(maxsize=None)
def _GetRungExpansions():
  """Retrieves the expansions of the rung states into two-spin product states.

  The coefficients are the Clebsch-Gordan coefficients
  <1/2 m_1, 1/2 m_2 | S M> in the Condon-Shortley phase convention, where
  spin 1 is on leg 1. The rung-local bit 0 is leg 1 and bit 1 is leg 2.

  Returns:
    dict[tuple[int, int], tuple[tuple[int, float]]]: rung-local bit-vectors
        and coefficients per rung state.
  """
  half = sympy.S(1) / 2

  rung_expansions = {}
  for spin, projection in _RUNG_STATES:
    terms = []
    for rung_bits in range(4):
      leg1_projection = half if rung_bits & 1 else -half
      leg2_projection = half if rung_bits & 2 else -half
      if leg1_projection + leg2_projection != projection:
        continue

      coefficient = cg.CG(
          half, leg1_projection, half, leg2_projection, sympy.S(spin),
          sympy.S(projection)).doit()
      if coefficient != 0:
        terms.append((rung_bits, float(coefficient)))

    rung_expansions[(spin, projection)] = tuple(terms)

  return rung_expansions


class Basis(object):
  """Ordered basis of the M_tot = 0 subspace.

  Attributes:
    enumeration_indexes (numpy.ndarray): position in enumeration order of
        every state in the current order.
    number_of_rungs (int): ladder length L.
    representation (str): representation, either su2 or so4.
    states (tuple): basis states in the current order.
  """

  def __init__(
      self, representation, number_of_rungs, states, enumeration_indexes=None):
    """Initializes a basis.

    Args:
      representation (str): representation, either su2 or so4.
      number_of_rungs (int): ladder length L.
      states (list[object]): basis states.
      enumeration_indexes (Optional[numpy.ndarray]): position in enumeration
          order of every state, where None represents the enumeration order
          itself.

    Raises:
      ValueError: if the representation is not supported or the states
          contain duplicates.
    """
    if representation not in definitions.REPRESENTATIONS:
      raise ValueError(f'Unsupported representation: {representation!s}')

    super(Basis, self).__init__()
    self._index_of = {state: index for index, state in enumerate(states)}
    if len(self._index_of) != len(states):
      raise ValueError('Duplicate basis states.')

    if enumeration_indexes is None:
      enumeration_indexes = numpy.arange(len(states))

    self.enumeration_indexes = numpy.asarray(enumeration_indexes, dtype=int)
    self.enumeration_indexes.setflags(write=False)
    self.number_of_rungs = number_of_rungs
    self.representation = representation
    self.states = tuple(states)

  def __len__(self):
    """Retrieves the dimension of the basis.

    Returns:
      int: number of basis states.
    """
    return len(self.states)

  def GetIndex(self, state):
    """Retrieves the position of a state.

    Args:
      state (object): basis state.

    Returns:
      int: position of the state in the current order.

    Raises:
      KeyError: if the state is not part of the basis.
    """
    return self._index_of[state]

  def Permute(self, permutation):
    """Reorders the basis.

    Args:
      permutation (numpy.ndarray): new order, where position p of the new basis
          holds state permutation[p] of this basis.

    Returns:
      Basis: reordered basis.

    Raises:
      ValueError: if permutation is not a permutation of the positions.
    """
    permutation = numpy.asarray(permutation, dtype=int)
    if not numpy.array_equal(
        numpy.sort(permutation), numpy.arange(len(self.states))):
      raise ValueError('Not a permutation of the basis positions.')

    states = [self.states[index] for index in permutation]
    return Basis(
        self.representation, self.number_of_rungs, states,
        enumeration_indexes=self.enumeration_indexes[permutation])

  def Truncate(self, dimension):
    """Keeps the leading states of the basis.

    Args:
      dimension (int): number of states to keep.

    Returns:
      Basis: basis of the first dimension states.

    Raises:
      ValueError: if dimension is out of range.
    """
    if dimension < 1 or dimension > len(self.states):
      raise ValueError(f'Unsupported dimension: {dimension:d}')

    return Basis(
        self.representation, self.number_of_rungs, self.states[:dimension],
        enumeration_indexes=self.enumeration_indexes[:dimension])


def _CheckNumberOfRungs(number_of_rungs):
  """Checks the ladder length against the dimension guard.

  Args:
    number_of_rungs (int): ladder length L.

  Raises:
    DimensionOverflowError: if the ladder length is out of range.
  """
  if not 1 <= number_of_rungs <= _MAXIMUM_NUMBER_OF_RUNGS:
    raise errors.DimensionOverflowError((
        f'Unsupported ladder length: {number_of_rungs!s}, supported range: '
        f'1 - {_MAXIMUM_NUMBER_OF_RUNGS:d}'))


def _IterateBitVectors(number_of_bits, number_of_set_bits):
  """Iterates over bit-vectors with a fixed number of set bits.

  Args:
    number_of_bits (int): length of the bit-vectors.
    number_of_set_bits (int): number of bits set in every bit-vector.

  Yields:
    int: bit-vector, in ascending integer order.
  """
  value = (1 << number_of_set_bits) - 1
  upper_bound = 1 << number_of_bits
  while value < upper_bound:
    yield value

    # Next larger integer with the same popcount.
    lowest_bit = value & -value
    ripple = value + lowest_bit
    value = (((ripple ^ value) >> 2) // lowest_bit) | ripple


def _IterateRungSequences(number_of_rungs, total_projection):
  """Iterates over rung state sequences with a fixed total projection.

  Args:
    number_of_rungs (int): number of rungs left to fill.
    total_projection (int): sum of M_i the remaining rungs must reach.

  Yields:
    tuple[tuple[int, int]]: rung states (S_i, M_i), in lexicographic order.
  """
  if number_of_rungs == 0:
    if total_projection == 0:
      yield ()
    return

  for rung_state in _RUNG_STATES:
    remainder = total_projection - rung_state[1]
    if abs(remainder) <= number_of_rungs - 1:
      for tail in _IterateRungSequences(number_of_rungs - 1, remainder):
        yield (rung_state, ) + tail


def GetSubspaceDimension(number_of_rungs):
  """Retrieves the dimension of the M_tot = 0 subspace.

  Args:
    number_of_rungs (int): ladder length L.

  Returns:
    int: C(2L, L).
  """
  return int(special.comb(2 * number_of_rungs, number_of_rungs, exact=True))


def EnumerateSU2(number_of_rungs):
  """Enumerates the su2 basis.

  Args:
    number_of_rungs (int): ladder length L.

  Returns:
    Basis: all bit-vectors of length 2L with L set bits, ascending.

  Raises:
    DimensionOverflowError: if the ladder length is out of range.
  """
  _CheckNumberOfRungs(number_of_rungs)

  states = list(_IterateBitVectors(2 * number_of_rungs, number_of_rungs))
  return Basis(definitions.REPRESENTATION_SU2, number_of_rungs, states)


def EnumerateSO4(number_of_rungs):
  """Enumerates the so4 basis.

  Args:
    number_of_rungs (int): ladder length L.

  Returns:
    Basis: all sequences of rung states (S_i, M_i) with sum M_i = 0, in
        lexicographic order with (0,0) < (1,-1) < (1,0) < (1,1) per rung.

  Raises:
    DimensionOverflowError: if the ladder length is out of range.
  """
  _CheckNumberOfRungs(number_of_rungs)

  states = list(_IterateRungSequences(number_of_rungs, 0))
  return Basis(definitions.REPRESENTATION_SO4, number_of_rungs, states)


def SU2ToSO4Matrix(number_of_rungs):
  """Builds the change of basis from su2 to so4.

  Column q holds the so4 state q expanded in the su2 basis, that is
  U[p, q] = <su2 state p|so4 state q>, so that an su2 matrix H transforms
  as U^T H U.

  Args:
    number_of_rungs (int): ladder length L.

  Returns:
    scipy.sparse.csr_matrix: real orthogonal matrix of dimension C(2L, L).

  Raises:
    DimensionOverflowError: if the ladder length is out of range.
  """
  su2_basis = EnumerateSU2(number_of_rungs)
  so4_basis = EnumerateSO4(number_of_rungs)
  rung_expansions = _GetRungExpansions()

  rows = []
  columns = []
  values = []
  for column, rung_states in enumerate(so4_basis.states):
    expansions = [rung_expansions[rung_state] for rung_state in rung_states]
    for terms in itertools.product(*expansions):
      bit_vector = 0
      coefficient = 1.0
      for rung_index, (rung_bits, rung_coefficient) in enumerate(terms):
        bit_vector |= rung_bits << (2 * rung_index)
        coefficient *= rung_coefficient

      rows.append(su2_basis.GetIndex(bit_vector))
      columns.append(column)
      values.append(coefficient)

  dimension = len(su2_basis)
  matrix = sparse.csr_matrix(
      (values, (rows, columns)), shape=(dimension, dimension))
  matrix.sort_indices()
  return matrix


def GetOrderingPermutation(
    basis, ham, g, strategy, amplitudes=None):
  """Determines the order in which basis states are kept.

  Ties keep the current order; the last position is eliminated first.

  Args:
    basis (Basis): basis in its current order.
    ham (HamiltonianPair): Hamiltonian expressed in the basis.
    g (float): coupling strength.
    strategy (str): ordering strategy, either diagonal_ascending or
        amplitude_descending.
    amplitudes (Optional[numpy.ndarray]): ground state amplitudes, required
        for amplitude_descending.

  Returns:
    numpy.ndarray: permutation of the current positions.

  Raises:
    ValueError: if the strategy is not supported, amplitudes are missing or
        the dimensions do not match.
  """
  if ham.dim != len(basis):
    raise ValueError((
        f'Hamiltonian dimension: {ham.dim:d} does not match basis '
        f'dimension: {len(basis):d}'))

  if strategy == definitions.ORDERING_DIAGONAL_ASCENDING:
    return numpy.argsort(ham.GetDiagonal(g), kind='stable')

  if strategy == definitions.ORDERING_AMPLITUDE_DESCENDING:
    if amplitudes is None:
      raise ValueError('Missing amplitudes for amplitude ordering.')

    amplitudes = numpy.asarray(amplitudes, dtype=float)
    if amplitudes.shape != (len(basis), ):
      raise ValueError((
          f'Number of amplitudes: {amplitudes.size:d} does not match basis '
          f'dimension: {len(basis):d}'))

    return numpy.argsort(-numpy.abs(amplitudes), kind='stable')

  raise ValueError(f'Unsupported ordering strategy: {strategy!s}')


def OrderBasis(basis, ham, g, strategy, amplitudes=None):
  """Orders a basis.

  Args:
    basis (Basis): basis in its current order.
    ham (HamiltonianPair): Hamiltonian expressed in the basis.
    g (float): coupling strength.
    strategy (str): ordering strategy, either diagonal_ascending or
        amplitude_descending.
    amplitudes (Optional[numpy.ndarray]): ground state amplitudes, required
        for amplitude_descending.

  Returns:
    Basis: reordered basis.

  Raises:
    ValueError: if the strategy is not supported, amplitudes are missing or
        the dimensions do not match.
  """
  permutation = GetOrderingPermutation(
      basis, ham, g, strategy, amplitudes=amplitudes)
  return basis.Permute(permutation)
