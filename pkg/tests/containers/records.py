#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the record containers of the result files."""

import unittest

from hsreduce.containers import manager
from hsreduce.containers import records

from tests import test_lib


class TrajectoryRowTest(test_lib.BaseTestCase):
  """Tests for the trajectory row."""

  def testColumnOrder(self):
    """Tests the order of the columns."""
    expected_attribute_names = [
        'step', 'n', 'g', 'lambda1', 'lambda2', 'lambda3', 'lambda4', 'e1',
        'e2', 'e3', 'e4', 'p1', 'p2', 'p3', 'p4', 'entropy', 'relevant',
        'irrelevant', 'dropped_amp', 'root_status', 'eliminated_index']

    trajectory_row = records.TrajectoryRow()

    self.assertEqual(
        trajectory_row.GetAttributeNames(), expected_attribute_names)

  def testRegistration(self):
    """Tests that the row is registered."""
    trajectory_row = manager.RecordContainersManager.CreateRecordContainer(
        'trajectory_row')
    self.assertIsInstance(trajectory_row, records.TrajectoryRow)
    self.assertEqual(trajectory_row.FORMAT_VERSION, 1)


class ComparisonRowTest(test_lib.BaseTestCase):
  """Tests for the comparison row."""

  def testColumnOrder(self):
    """Tests the order of the columns."""
    comparison_row = records.ComparisonRow()

    attribute_names = comparison_row.GetAttributeNames()

    self.assertEqual(attribute_names[:3], ['n', 'p1_su2', 'p1_so4'])
    self.assertIn('relevant_difference_so4', attribute_names)

  def testRegistration(self):
    """Tests that the row is registered."""
    comparison_row = manager.RecordContainersManager.CreateRecordContainer(
        'comparison_row')
    self.assertIsInstance(comparison_row, records.ComparisonRow)
    self.assertEqual(comparison_row.FORMAT_VERSION, 1)


if __name__ == '__main__':
  unittest.main()
