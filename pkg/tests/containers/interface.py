#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for the record container interface."""

import unittest

from tests import test_lib


class RecordContainerTest(test_lib.BaseTestCase):
  """Tests for the record container interface."""

  def testInitialize(self):
    """Tests the __init__ function."""
    record_container = test_lib.TestRecordContainer()

    self.assertIsNone(record_container.attribute)
    self.assertIsNone(record_container.value)

  def testCopyFromDict(self):
    """Tests the CopyFromDict function."""
    record_container = test_lib.TestRecordContainer()
    record_container.CopyFromDict({'attribute': 'test', 'value': 0.5})

    self.assertEqual(record_container.attribute, 'test')
    self.assertEqual(record_container.value, 0.5)

    with self.assertRaises(KeyError):
      record_container.CopyFromDict({'bogus': 1})

  def testCopyToDict(self):
    """Tests the CopyToDict function."""
    record_container = test_lib.TestRecordContainer()
    record_container.attribute = 'test'

    expected_dict = {
        'attribute': 'test',
        'value': None}

    test_dict = record_container.CopyToDict()

    self.assertEqual(test_dict, expected_dict)

  def testGetAttributeNames(self):
    """Tests the GetAttributeNames function."""
    record_container = test_lib.TestRecordContainer()
    record_container.unrelated = 'unrelated'

    attribute_names = record_container.GetAttributeNames()

    self.assertEqual(attribute_names, ['attribute', 'value'])

  def testGetAttributes(self):
    """Tests the GetAttributes function."""
    record_container = test_lib.TestRecordContainer()
    record_container.attribute = 'test'
    record_container.value = 2.0

    expected_attributes = [
        ('attribute', 'test'),
        ('value', 2.0)]

    attributes = list(record_container.GetAttributes())

    self.assertEqual(attributes, expected_attributes)


if __name__ == '__main__':
  unittest.main()
