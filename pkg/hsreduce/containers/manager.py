# -*- coding: utf-8 -*-
"""Registry of the record containers of the result files."""


class RecordContainersManager(object):
  """Record containers manager.

  Record file readers and writers look up the container class and its schema
  by container type.
  """

  _record_container_classes = {}

  @classmethod
  def _GetRecordContainerClass(cls, container_type):
    """Retrieves a registered record container class.

    Args:
      container_type (str): container type.

    Returns:
      type: record container class.

    Raises:
      ValueError: if the container type is not supported.
    """
    container_class = cls._record_container_classes.get(
        container_type.lower(), None)
    if not container_class:
      raise ValueError(f'Unsupported container type: {container_type!s}')

    return container_class

  @classmethod
  def CreateRecordContainer(cls, container_type):
    """Creates an empty record container.

    Args:
      container_type (str): container type, such as trajectory_row.

    Returns:
      RecordContainer: record container.

    Raises:
      ValueError: if the container type is not supported.
    """
    container_class = cls._GetRecordContainerClass(container_type)
    return container_class()

  @classmethod
  def GetSchema(cls, container_type):
    """Retrieves the schema of a record container.

    Args:
      container_type (str): container type.

    Returns:
      dict[str, str]: data type per attribute name, in column order.

    Raises:
      ValueError: if the container type is not supported.
    """
    container_class = cls._GetRecordContainerClass(container_type)
    return dict(container_class.SCHEMA)

  @classmethod
  def RegisterRecordContainer(cls, record_container_class):
    """Registers a record container class by its lower case container type.

    Args:
      record_container_class (type): record container class.

    Raises:
      KeyError: if a class is already registered for the container type.
    """
    container_type = record_container_class.CONTAINER_TYPE.lower()
    if container_type in cls._record_container_classes:
      raise KeyError((
          f'Record container class already set for container type: '
          f'{record_container_class.CONTAINER_TYPE:s}.'))

    cls._record_container_classes[container_type] = record_container_class

  @classmethod
  def RegisterRecordContainers(cls, record_container_classes):
    """Registers record container classes.

    Args:
      record_container_classes (list[type]): record container classes.

    Raises:
      KeyError: if a class is already registered for a container type.
    """
    for record_container_class in record_container_classes:
      cls.RegisterRecordContainer(record_container_class)
