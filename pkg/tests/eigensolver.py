#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the eigensolver."""

import unittest

import numpy
from scipy import linalg

from hsreduce import basis
from hsreduce import eigensolver
from hsreduce import errors
from hsreduce import hamiltonian

from tests import test_lib


class TestProfiler(object):
  """Profiler that records the samples for testing purposes."""

  def __init__(self):
    """Initializes a profiler."""
    super(TestProfiler, self).__init__()
    self.samples = []
    self.timings = []

  def Sample(self, profile_name, method, dimension, iterations):
    """Takes a sample."""
    self.samples.append((profile_name, method, dimension, iterations))

  def StartTiming(self, profile_name):
    """Starts timing."""
    self.timings.append(('start', profile_name))

  def StopTiming(self, profile_name):
    """Stops timing."""
    self.timings.append(('stop', profile_name))


class EigensolverTest(test_lib.BaseTestCase):
  """Tests for the eigensolver."""

  # pylint: disable=protected-access

  def _CreateLadder(self, number_of_rungs, representation, rung_coupling):
    """Creates a ladder Hamiltonian.

    Args:
      number_of_rungs (int): ladder length L.
      representation (str): representation, either su2 or so4.
      rung_coupling (float): rung coupling J_t.

    Returns:
      HamiltonianPair: Hamiltonian pair.
    """
    couplings = hamiltonian.CouplingSet(rung_coupling, 5.0, 3.0)
    if representation == 'so4':
      return hamiltonian.BuildSO4(
          basis.EnumerateSO4(number_of_rungs), couplings)

    return hamiltonian.BuildSU2(basis.EnumerateSU2(number_of_rungs), couplings)

  def testInitialize(self):
    """Tests the __init__ function."""
    test_eigensolver = eigensolver.Eigensolver()
    self.assertEqual(test_eigensolver.dense_threshold, 256)
    self.assertEqual(test_eigensolver.tolerance, 1e-9)

    with self.assertRaises(ValueError):
      eigensolver.Eigensolver(tolerance=0.0)

  def testLowestEigenpairsDense(self):
    """Tests the LowestEigenpairs function with the dense method."""
    test_hamiltonian = self._CreateLadder(3, 'su2', 15.0)
    test_eigensolver = eigensolver.Eigensolver()

    result = test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 4)

    self.assertEqual(result.method, 'dense')
    self.assertEqual(result.iterations, 0)
    self.assertEqual(result.number_of_pairs, 4)

    expected_eigenvalues = linalg.eigvalsh(
        test_hamiltonian.GetMatrix(15.0).toarray())[:4]
    numpy.testing.assert_allclose(
        result.eigenvalues, expected_eigenvalues, atol=1e-10)
    self.assertLessEqual(result.residuals.max(), 1e-9)

    with self.assertRaises(ValueError):
      test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 0)

    with self.assertRaises(ValueError):
      test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 21)

  def testLowestEigenpairsLanczos(self):
    """Tests the LowestEigenpairs function against dense diagonalization."""
    for representation in ('su2', 'so4'):
      test_hamiltonian = self._CreateLadder(6, representation, 15.0)

      test_eigensolver = eigensolver.Eigensolver(dense_threshold=256)
      result = test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 4)

      self.assertEqual(result.method, 'lanczos')
      self.assertGreater(result.iterations, 0)

      expected_eigenvalues = linalg.eigvalsh(
          test_hamiltonian.GetMatrix(15.0).toarray())[:4]
      numpy.testing.assert_allclose(
          result.eigenvalues, expected_eigenvalues, rtol=0.0, atol=1e-8)
      self.assertLessEqual(result.residuals.max(), 1e-9)

      overlaps = result.eigenvectors.T @ result.eigenvectors
      numpy.testing.assert_allclose(overlaps, numpy.eye(4), atol=1e-8)

  def testLowestEigenpairsLanczosDegenerate(self):
    """Tests the LowestEigenpairs function with degenerate levels."""
    # A Krylov space of a single start vector holds only one state of the
    # degenerate ground level.
    diagonal = numpy.concatenate([[-2.0, -2.0, -1.0], numpy.zeros(37)])
    test_hamiltonian = test_lib.CreateHamiltonianPair(numpy.diag(diagonal))

    test_eigensolver = eigensolver.Eigensolver(dense_threshold=0)
    result = test_eigensolver.LowestEigenpairs(test_hamiltonian, 1.0, 3)

    self.assertEqual(result.method, 'lanczos')
    numpy.testing.assert_allclose(
        result.eigenvalues, [-2.0, -2.0, -1.0], atol=1e-8)

  def testLowestEigenpairsDeterministic(self):
    """Tests that identical seeds give identical results."""
    test_hamiltonian = self._CreateLadder(5, 'su2', 5.5)

    first_result = eigensolver.LowestEigenpairs(
        test_hamiltonian, 5.5, 2, dense_threshold=0, seed=3)
    second_result = eigensolver.LowestEigenpairs(
        test_hamiltonian, 5.5, 2, dense_threshold=0, seed=3)

    numpy.testing.assert_array_equal(
        first_result.eigenvalues, second_result.eigenvalues)
    numpy.testing.assert_array_equal(
        first_result.eigenvectors, second_result.eigenvectors)

  def testLowestEigenpairsNotConverged(self):
    """Tests the LowestEigenpairs function without convergence."""
    test_hamiltonian = self._CreateLadder(5, 'su2', 15.0)

    test_eigensolver = eigensolver.Eigensolver(
        dense_threshold=0, tolerance=1e-9, maximum_iterations=5)

    with self.assertRaises(errors.ConvergenceError) as context:
      test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 2)

    self.assertIsNotNone(context.exception.residuals)

  def testSetProfiler(self):
    """Tests the SetProfiler function."""
    test_hamiltonian = self._CreateLadder(2, 'su2', 15.0)

    test_profiler = TestProfiler()
    test_eigensolver = eigensolver.Eigensolver()
    test_eigensolver.SetProfiler(test_profiler)

    test_eigensolver.LowestEigenpairs(test_hamiltonian, 15.0, 1)

    self.assertEqual(
        test_profiler.timings,
        [('start', 'eigensolver'), ('stop', 'eigensolver')])
    self.assertEqual(test_profiler.samples, [('eigensolver', 'dense', 6, 0)])


class GroundAmplitudesTest(test_lib.BaseTestCase):
  """Tests for the GroundAmplitudes function."""

  def testGroundAmplitudes(self):
    """Tests the GroundAmplitudes function."""
    eigenvectors = numpy.array([[0.6, 0.8], [-0.8, 0.6]])
    result = eigensolver.EigenResult(
        numpy.array([-1.0, 1.0]), eigenvectors, numpy.zeros(2))

    amplitudes = eigensolver.GroundAmplitudes(result)
    numpy.testing.assert_allclose(amplitudes, [-0.6, 0.8])

    test_basis = basis.EnumerateSU2(1)
    amplitudes = eigensolver.GroundAmplitudes(result, basis=test_basis)
    self.assertAlmostEqual(float(amplitudes @ amplitudes), 1.0)

    with self.assertRaises(ValueError):
      eigensolver.GroundAmplitudes(result, basis=basis.EnumerateSU2(2))

    empty_result = eigensolver.EigenResult(
        numpy.zeros(0), numpy.zeros((2, 0)), numpy.zeros(0))
    with self.assertRaises(ValueError):
      eigensolver.GroundAmplitudes(empty_result)


if __name__ == '__main__':
  unittest.main()
