# -*- coding: utf-8 -*-
"""CSV-based record files.

A record file is UTF-8 encoded with LF line endings. The first row is the
header with the attribute names of the record container schema, every other
row holds one record. Floating-point values have 17 significant digits.

The header is the only format marker in the file. Readers and writers expose
the FORMAT_VERSION of the record container as format_version, which changes
whenever the columns of the schema change.
"""

import csv

from hsreduce import interface
from hsreduce.containers import manager as containers_manager
from hsreduce.containers import records  # pylint: disable=unused-import
from hsreduce.helpers import schema as schema_helper


class CSVRecordWriter(interface.RecordWriter):
  """CSV-based record writer."""

  def __init__(self, container_type):
    """Initializes a CSV record writer.

    Args:
      container_type (str): type of the record containers written.

    Raises:
      ValueError: if the container type is not supported.
    """
    super(CSVRecordWriter, self).__init__()
    self._container_type = container_type
    self._csv_writer = None
    self._file_object = None
    self._owns_file_object = False
    self._schema = containers_manager.RecordContainersManager.GetSchema(
        container_type)

    container = (
        containers_manager.RecordContainersManager.CreateRecordContainer(
            container_type))
    self.format_version = getattr(container, 'FORMAT_VERSION', None)

  def _RaiseIfNotWritable(self):
    """Raises if the writer is not writable.

    Raises:
      IOError: when the writer is closed.
      OSError: when the writer is closed.
    """
    if not self._csv_writer:
      raise IOError('Unable to write to closed record writer.')

  def _WriteRecord(self, container):
    """Writes a record.

    Args:
      container (RecordContainer): record container.

    Raises:
      IOError: if the container type does not match or a data type is not
          supported.
      OSError: if the container type does not match or a data type is not
          supported.
    """
    if container.CONTAINER_TYPE != self._container_type:
      raise IOError(
          f'Unsupported container type: {container.CONTAINER_TYPE!s}')

    row = []
    for attribute_name, data_type in self._schema.items():
      serializer = schema_helper.SchemaHelper.GetAttributeSerializer(data_type)
      if not serializer:
        raise IOError(f'Unsupported data type: {data_type:s}')

      row.append(serializer.SerializeValue(
          getattr(container, attribute_name, None)))

    self._csv_writer.writerow(row)

  def Close(self):
    """Closes the writer.

    Raises:
      IOError: if the writer is already closed.
      OSError: if the writer is already closed.
    """
    if not self._csv_writer:
      raise IOError('Record writer already closed.')

    if self._owns_file_object:
      self._file_object.close()

    self._csv_writer = None
    self._file_object = None
    self._owns_file_object = False

  def Open(self, path=None, file_object=None, **unused_kwargs):
    """Opens the writer and writes the header row.

    Args:
      path (Optional[str]): path of the CSV file.
      file_object (Optional[file]): text file-like object to write to, used
          when no path is provided.

    Raises:
      IOError: if the writer is already opened or neither path nor file
          object are provided.
      OSError: if the writer is already opened or neither path nor file
          object are provided.
    """
    if self._csv_writer:
      raise IOError('Record writer already opened.')

    if path:
      file_object = open(path, 'w', encoding='utf-8', newline='')
      self._owns_file_object = True

    elif not file_object:
      raise IOError('Missing path or file object.')

    self._file_object = file_object
    self._csv_writer = csv.writer(file_object, lineterminator='\n')
    self._csv_writer.writerow(list(self._schema))


class CSVRecordReader(object):
  """CSV-based record reader.

  Attributes:
    format_version (int): format version of the records read.
  """

  def __init__(self, container_type):
    """Initializes a CSV record reader.

    Args:
      container_type (str): type of the record containers read.

    Raises:
      ValueError: if the container type is not supported.
    """
    super(CSVRecordReader, self).__init__()
    self._container_type = container_type
    self._schema = containers_manager.RecordContainersManager.GetSchema(
        container_type)

    container = (
        containers_manager.RecordContainersManager.CreateRecordContainer(
            container_type))
    self.format_version = getattr(container, 'FORMAT_VERSION', None)

  def _ReadFromFileObject(self, file_object):
    """Reads records from a file-like object.

    Args:
      file_object (file): text file-like object.

    Yields:
      RecordContainer: record container.

    Raises:
      IOError: if the header does not match the schema.
      OSError: if the header does not match the schema.
    """
    csv_reader = csv.reader(file_object)
    header = next(csv_reader, None)
    if header != list(self._schema):
      raise IOError(f'Unsupported header: {header!s}')

    for row in csv_reader:
      container = (
          containers_manager.RecordContainersManager.CreateRecordContainer(
              self._container_type))

      attributes = {}
      for (attribute_name, data_type), value in zip(self._schema.items(), row):
        serializer = schema_helper.SchemaHelper.GetAttributeSerializer(
            data_type)
        attributes[attribute_name] = serializer.DeserializeValue(value)

      container.CopyFromDict(attributes)
      yield container

  def ReadFromFile(self, path):
    """Reads records from a CSV file.

    Args:
      path (str): path of the CSV file.

    Yields:
      RecordContainer: record container.
    """
    with open(path, 'r', encoding='utf-8', newline='') as file_object:
      for container in self._ReadFromFileObject(file_object):
        yield container
