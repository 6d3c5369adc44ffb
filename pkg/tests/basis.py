#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the bases of the M_tot = 0 subspace."""

import math
import unittest

import numpy
from scipy import special

from hsreduce import basis
from hsreduce import errors
from hsreduce import hamiltonian

from tests import test_lib


class BasisTest(test_lib.BaseTestCase):
  """Tests for the basis."""

  def testInitialize(self):
    """Tests the __init__ function."""
    test_basis = basis.Basis('su2', 1, [1, 2])
    self.assertEqual(len(test_basis), 2)
    self.assertEqual(list(test_basis.enumeration_indexes), [0, 1])

    with self.assertRaises(ValueError):
      basis.Basis('bogus', 1, [1, 2])

    with self.assertRaises(ValueError):
      basis.Basis('su2', 1, [1, 1])

  def testGetIndex(self):
    """Tests the GetIndex function."""
    for number_of_rungs in (1, 2, 3, 4):
      for test_basis in (
          basis.EnumerateSU2(number_of_rungs),
          basis.EnumerateSO4(number_of_rungs)):
        for position, state in enumerate(test_basis.states):
          self.assertEqual(test_basis.GetIndex(state), position)

    test_basis = basis.EnumerateSU2(2)
    with self.assertRaises(KeyError):
      test_basis.GetIndex(0b1111)

  def testPermute(self):
    """Tests the Permute function."""
    test_basis = basis.EnumerateSU2(2)

    permuted_basis = test_basis.Permute([5, 4, 3, 2, 1, 0])
    self.assertEqual(permuted_basis.states, test_basis.states[::-1])
    self.assertEqual(
        list(permuted_basis.enumeration_indexes), [5, 4, 3, 2, 1, 0])
    self.assertEqual(permuted_basis.GetIndex(test_basis.states[0]), 5)

    twice_permuted_basis = permuted_basis.Permute([1, 0, 2, 3, 4, 5])
    self.assertEqual(
        list(twice_permuted_basis.enumeration_indexes), [4, 5, 3, 2, 1, 0])

    with self.assertRaises(ValueError):
      test_basis.Permute([0, 0, 1, 2, 3, 4])

  def testTruncate(self):
    """Tests the Truncate function."""
    test_basis = basis.EnumerateSO4(2).Permute([5, 4, 3, 2, 1, 0])

    truncated_basis = test_basis.Truncate(4)
    self.assertEqual(len(truncated_basis), 4)
    self.assertEqual(truncated_basis.states, test_basis.states[:4])
    self.assertEqual(list(truncated_basis.enumeration_indexes), [5, 4, 3, 2])
    self.assertEqual(truncated_basis.representation, 'so4')

    with self.assertRaises(ValueError):
      test_basis.Truncate(0)

    with self.assertRaises(ValueError):
      test_basis.Truncate(7)


class EnumerationTest(test_lib.BaseTestCase):
  """Tests for the basis enumeration functions."""

  def testGetSubspaceDimension(self):
    """Tests the GetSubspaceDimension function."""
    self.assertEqual(basis.GetSubspaceDimension(1), 2)
    self.assertEqual(basis.GetSubspaceDimension(2), 6)
    self.assertEqual(basis.GetSubspaceDimension(6), 924)

  def testEnumerateSU2(self):
    """Tests the EnumerateSU2 function."""
    test_basis = basis.EnumerateSU2(1)
    self.assertEqual(test_basis.states, (0b01, 0b10))
    self.assertEqual(test_basis.representation, 'su2')

    test_basis = basis.EnumerateSU2(2)
    self.assertEqual(
        test_basis.states, (0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100))

    test_basis = basis.EnumerateSU2(6)
    self.assertEqual(len(test_basis), 924)
    self.assertEqual(list(test_basis.states), sorted(test_basis.states))

    for bit_vector in test_basis.states:
      self.assertEqual(bin(bit_vector).count('1'), 6)
      self.assertLess(bit_vector, 1 << 12)

    with self.assertRaises(errors.DimensionOverflowError):
      basis.EnumerateSU2(0)

    with self.assertRaises(errors.DimensionOverflowError):
      basis.EnumerateSU2(17)

  def testEnumerateSO4(self):
    """Tests the EnumerateSO4 function."""
    test_basis = basis.EnumerateSO4(1)
    self.assertEqual(test_basis.states, (((0, 0), ), ((1, 0), )))
    self.assertEqual(test_basis.representation, 'so4')

    test_basis = basis.EnumerateSO4(2)
    expected_states = (
        ((0, 0), (0, 0)),
        ((0, 0), (1, 0)),
        ((1, -1), (1, 1)),
        ((1, 0), (0, 0)),
        ((1, 0), (1, 0)),
        ((1, 1), (1, -1)))
    self.assertEqual(test_basis.states, expected_states)

    test_basis = basis.EnumerateSO4(6)
    self.assertEqual(len(test_basis), 924)
    self.assertEqual(list(test_basis.states), sorted(test_basis.states))

    for rung_states in test_basis.states:
      self.assertEqual(sum(projection for _, projection in rung_states), 0)
      for spin, projection in rung_states:
        self.assertLessEqual(abs(projection), spin)

    with self.assertRaises(errors.DimensionOverflowError):
      basis.EnumerateSO4(0)

  def testDimensions(self):
    """Tests that both representations span C(2L, L) states."""
    for number_of_rungs in range(1, 9):
      expected_dimension = special.comb(
          2 * number_of_rungs, number_of_rungs, exact=True)
      self.assertEqual(
          len(basis.EnumerateSU2(number_of_rungs)), expected_dimension)
      self.assertEqual(
          len(basis.EnumerateSO4(number_of_rungs)), expected_dimension)


class SU2ToSO4MatrixTest(test_lib.BaseTestCase):
  """Tests for the SU2ToSO4Matrix function."""

  # pylint: disable=protected-access

  def testRungExpansions(self):
    """Tests the Clebsch-Gordan expansions of the rung states."""
    inverse_sqrt2 = 1.0 / math.sqrt(2.0)
    expected_expansions = {
        (0, 0): [(0b01, inverse_sqrt2), (0b10, -inverse_sqrt2)],
        (1, -1): [(0b00, 1.0)],
        (1, 0): [(0b01, inverse_sqrt2), (0b10, inverse_sqrt2)],
        (1, 1): [(0b11, 1.0)]}

    rung_expansions = basis._GetRungExpansions()
    self.assertEqual(sorted(rung_expansions), sorted(expected_expansions))

    for rung_state, expected_terms in expected_expansions.items():
      terms = rung_expansions[rung_state]
      self.assertEqual(
          [rung_bits for rung_bits, _ in terms],
          [rung_bits for rung_bits, _ in expected_terms])

      for (_, coefficient), (_, expected_coefficient) in zip(
          terms, expected_terms):
        self.assertAlmostEqual(coefficient, expected_coefficient, places=15)

  def testSingleRung(self):
    """Tests the change of basis of a single rung."""
    transform = basis.SU2ToSO4Matrix(1).toarray()

    # Columns are the singlet and the M=0 triplet expanded in the up-down and
    # down-up states.
    inverse_sqrt2 = 1.0 / math.sqrt(2.0)
    expected_transform = numpy.array([
        [inverse_sqrt2, inverse_sqrt2],
        [-inverse_sqrt2, inverse_sqrt2]])
    numpy.testing.assert_allclose(transform, expected_transform, atol=1e-15)

  def testOrthogonality(self):
    """Tests that the change of basis is orthogonal."""
    for number_of_rungs in (1, 2, 3, 4, 5):
      transform = basis.SU2ToSO4Matrix(number_of_rungs).toarray()
      identity = numpy.eye(transform.shape[0])

      deviation = numpy.abs(transform.T @ transform - identity).max()
      self.assertLessEqual(deviation, 1e-12)

  def testTripletPlusOne(self):
    """Tests that (1,1)(1,-1) is the product of up-up and down-down."""
    so4_basis = basis.EnumerateSO4(2)
    su2_basis = basis.EnumerateSU2(2)
    transform = basis.SU2ToSO4Matrix(2).toarray()

    column = so4_basis.GetIndex(((1, 1), (1, -1)))
    row = su2_basis.GetIndex(0b0011)

    self.assertEqual(transform[row, column], 1.0)
    self.assertEqual(numpy.count_nonzero(transform[:, column]), 1)


class OrderingTest(test_lib.BaseTestCase):
  """Tests for the basis ordering functions."""

  def _CreateDiagonalHamiltonian(self, diagonal):
    """Creates a Hamiltonian pair with a diagonal H1.

    Args:
      diagonal (list[float]): diagonal of H1.

    Returns:
      HamiltonianPair: Hamiltonian pair.
    """
    return test_lib.CreateHamiltonianPair(numpy.diag(diagonal))

  def testGetOrderingPermutationDiagonalAscending(self):
    """Tests the GetOrderingPermutation function with diagonal ordering."""
    test_basis = basis.Basis('su2', 2, [3, 5, 6, 9])
    test_hamiltonian = self._CreateDiagonalHamiltonian([-3.0, 1.0, 1.0, 0.0])

    permutation = basis.GetOrderingPermutation(
        test_basis, test_hamiltonian, 1.0, 'diagonal_ascending')
    self.assertEqual(list(permutation), [0, 3, 1, 2])

  def testGetOrderingPermutationAmplitudeDescending(self):
    """Tests the GetOrderingPermutation function with amplitude ordering."""
    test_basis = basis.Basis('su2', 2, [3, 5, 6])
    test_hamiltonian = self._CreateDiagonalHamiltonian([0.0, 0.0, 0.0])

    permutation = basis.GetOrderingPermutation(
        test_basis, test_hamiltonian, 1.0, 'amplitude_descending',
        amplitudes=[0.9, 0.1, -0.42])
    self.assertEqual(list(permutation), [0, 2, 1])

    permutation = basis.GetOrderingPermutation(
        test_basis, test_hamiltonian, 1.0, 'amplitude_descending',
        amplitudes=[0.5, -0.5, 0.5])
    self.assertEqual(list(permutation), [0, 1, 2])

    with self.assertRaises(ValueError):
      basis.GetOrderingPermutation(
          test_basis, test_hamiltonian, 1.0, 'amplitude_descending')

    with self.assertRaises(ValueError):
      basis.GetOrderingPermutation(
          test_basis, test_hamiltonian, 1.0, 'amplitude_descending',
          amplitudes=[1.0, 0.0])

    with self.assertRaises(ValueError):
      basis.GetOrderingPermutation(
          test_basis, test_hamiltonian, 1.0, 'bogus')

  def testOrderBasis(self):
    """Tests the OrderBasis function."""
    couplings = hamiltonian.CouplingSet(1.0, 0.0, 0.0)
    test_basis = basis.EnumerateSU2(1)
    test_hamiltonian = hamiltonian.BuildSU2(test_basis, couplings)

    # Both diagonal elements are -1/4, the order is unchanged.
    ordered_basis = basis.OrderBasis(
        test_basis, test_hamiltonian, 1.0, 'diagonal_ascending')
    self.assertEqual(ordered_basis.states, test_basis.states)

    couplings = hamiltonian.CouplingSet(15.0, 5.0, 3.0)
    test_basis = basis.EnumerateSU2(3)
    test_hamiltonian = hamiltonian.BuildSU2(test_basis, couplings)

    ordered_basis = basis.OrderBasis(
        test_basis, test_hamiltonian, 15.0, 'diagonal_ascending')
    self.assertEqual(sorted(ordered_basis.states), list(test_basis.states))

    diagonal = test_hamiltonian.GetDiagonal(15.0)
    ordered_diagonal = diagonal[ordered_basis.enumeration_indexes]
    self.assertTrue(numpy.all(numpy.diff(ordered_diagonal) >= 0.0))


if __name__ == '__main__':
  unittest.main()
