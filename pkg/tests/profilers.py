#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the profiler classes."""

import gzip
import os
import time
import unittest

from hsreduce import profilers

from tests import test_lib


class CPUTimeMeasurementTest(test_lib.BaseTestCase):
  """Tests for the CPU time measurement."""

  def testSampleStartStop(self):
    """Tests the SampleStart and SampleStop functions."""
    cpu_measurement = profilers.CPUTimeMeasurement()
    cpu_measurement.SampleStart()
    cpu_measurement.SampleStop()

    self.assertEqual(cpu_measurement.number_of_samples, 1)
    self.assertGreaterEqual(cpu_measurement.total_cpu_time, 0.0)


class EigensolverProfilerTest(test_lib.BaseTestCase):
  """Tests for the eigensolver profiler."""

  # pylint: disable=protected-access

  def testIsSupported(self):
    """Tests the IsSupported function."""
    self.assertTrue(profilers.EigensolverProfiler.IsSupported())

  def testGetSampleFilePath(self):
    """Tests the GetSampleFilePath function."""
    test_profiler = profilers.EigensolverProfiler('test', 'profiles')
    self.assertEqual(
        test_profiler.GetSampleFilePath(),
        os.path.join('profiles', 'eigensolver-test.csv.gz'))

  def testStartStop(self):
    """Tests the Start and Stop functions."""
    with test_lib.TempDirectory() as temp_directory:
      test_profiler = profilers.EigensolverProfiler('test', temp_directory)

      test_profiler.Start()
      test_profiler.Stop()

      # Stopping twice is harmless.
      test_profiler.Stop()

      self.assertTrue(os.path.exists(test_profiler.GetSampleFilePath()))

  def testSample(self):
    """Tests the Sample function."""
    with test_lib.TempDirectory() as temp_directory:
      test_profiler = profilers.EigensolverProfiler('test', temp_directory)

      test_profiler.Start()

      for _ in range(5):
        test_profiler.StartTiming('eigensolver')
        time.sleep(0.01)
        test_profiler.StopTiming('eigensolver')
        test_profiler.Sample('eigensolver', 'lanczos', 924, 120)

      test_profiler.Stop()

      with gzip.open(test_profiler.GetSampleFilePath(), 'rt',
                     encoding='utf-8') as file_object:
        lines = file_object.read().splitlines()

    self.assertEqual(len(lines), 6)
    self.assertEqual(lines[0], profilers.EigensolverProfiler._FILE_HEADER[:-1])

    values = lines[1].split('\t')
    self.assertEqual(values[1:5], ['eigensolver', 'lanczos', '924', '120'])
    self.assertGreater(float(values[5]), 0.0)


if __name__ == '__main__':
  unittest.main()
