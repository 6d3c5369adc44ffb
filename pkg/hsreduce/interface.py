# -*- coding: utf-8 -*-
"""The record file interface."""

import abc


class AttributeSerializer(object):
  """Attribute serializer."""

  @abc.abstractmethod
  def DeserializeValue(self, value):
    """Deserializes a value.

    Args:
      value (str): serialized value.

    Returns:
      object: runtime value.
    """

  @abc.abstractmethod
  def SerializeValue(self, value):
    """Serializes a value.

    Args:
      value (object): runtime value.

    Returns:
      str: serialized value.
    """


class RecordWriter(object):
  """Interface of a record writer.

  Attributes:
    format_version (int): format version of the written records.
  """

  def __init__(self):
    """Initializes a record writer."""
    super(RecordWriter, self).__init__()
    self._number_of_records = 0

    self.format_version = None

  @property
  def number_of_records(self):
    """int: number of records written."""
    return self._number_of_records

  @abc.abstractmethod
  def _RaiseIfNotWritable(self):
    """Raises if the writer is not writable.

    Raises:
      OSError: if the writer cannot be written to.
      IOError: if the writer cannot be written to.
    """

  @abc.abstractmethod
  def _WriteRecord(self, container):
    """Writes a record.

    Args:
      container (RecordContainer): record container.
    """

  @abc.abstractmethod
  def Close(self):
    """Closes the writer."""

  @abc.abstractmethod
  def Open(self, **kwargs):
    """Opens the writer."""

  def WriteRecord(self, container):
    """Writes a record.

    Args:
      container (RecordContainer): record container.

    Raises:
      OSError: if the writer cannot be written to.
      IOError: if the writer cannot be written to.
    """
    self._RaiseIfNotWritable()
    self._WriteRecord(container)
    self._number_of_records += 1
