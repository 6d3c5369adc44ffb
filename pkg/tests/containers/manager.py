#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the record containers manager."""

import unittest
from unittest import mock

from hsreduce.containers import manager
from hsreduce.containers import records

from tests import test_lib as shared_test_lib


class RecordContainersManagerTest(shared_test_lib.BaseTestCase):
  """Tests for the record containers manager."""

  # pylint: disable=protected-access

  def testCreateRecordContainer(self):
    """Tests the CreateRecordContainer function."""
    record_container = manager.RecordContainersManager.CreateRecordContainer(
        'trajectory_row')
    self.assertIsInstance(record_container, records.TrajectoryRow)
    self.assertIsNone(record_container.n)

    record_container = manager.RecordContainersManager.CreateRecordContainer(
        'Comparison_Row')
    self.assertIsInstance(record_container, records.ComparisonRow)

    with self.assertRaises(ValueError):
      manager.RecordContainersManager.CreateRecordContainer('bogus')

  def testGetSchema(self):
    """Tests the GetSchema function."""
    schema = manager.RecordContainersManager.GetSchema('trajectory_row')
    self.assertEqual(list(schema)[:3], ['step', 'n', 'g'])
    self.assertEqual(schema['root_status'], 'str')

    # The schema is a copy.
    schema['n'] = 'float'
    self.assertEqual(records.TrajectoryRow.SCHEMA['n'], 'int')

    with self.assertRaises(ValueError):
      manager.RecordContainersManager.GetSchema('bogus')

  def testRegisterRecordContainers(self):
    """Tests the RegisterRecordContainers function."""
    with mock.patch.dict(
        manager.RecordContainersManager._record_container_classes):
      manager.RecordContainersManager.RegisterRecordContainers([
          shared_test_lib.TestRecordContainer])

      schema = manager.RecordContainersManager.GetSchema('test_container')
      self.assertEqual(schema, shared_test_lib.TestRecordContainer.SCHEMA)

      with self.assertRaises(KeyError):
        manager.RecordContainersManager.RegisterRecordContainer(
            shared_test_lib.TestRecordContainer)

      with self.assertRaises(KeyError):
        manager.RecordContainersManager.RegisterRecordContainer(
            records.TrajectoryRow)

    with self.assertRaises(ValueError):
      manager.RecordContainersManager.GetSchema('test_container')


if __name__ == '__main__':
  unittest.main()
