# -*- coding: utf-8 -*-
"""The record container interface."""


class RecordContainer(object):
  """The record container interface.

  A record container holds the values of one row of a results file. The
  CONTAINER_TYPE class attribute identifies the kind of row, for example
  "trajectory_row" for a row of a trajectory CSV file.

  The SCHEMA class attribute maps the attribute names, in column order, to
  their data types. Only attributes in the schema are part of the record.
  """

  CONTAINER_TYPE = None

  SCHEMA = {}

  def __init__(self):
    """Initializes a record container."""
    super(RecordContainer, self).__init__()
    for attribute_name in self.SCHEMA:
      setattr(self, attribute_name, None)

  def CopyFromDict(self, attributes):
    """Copies the record container from a dictionary.

    Args:
      attributes (dict[str, object]): attribute values per name.

    Raises:
      KeyError: if an attribute is not defined by the schema.
    """
    for attribute_name, attribute_value in attributes.items():
      if attribute_name not in self.SCHEMA:
        raise KeyError((
            f'Attribute: {attribute_name:s} not defined by schema of: '
            f'{self.CONTAINER_TYPE!s}'))

      setattr(self, attribute_name, attribute_value)

  def CopyToDict(self):
    """Copies the record container to a dictionary.

    Returns:
      dict[str, object]: attribute values per name, in column order.
    """
    return dict(self.GetAttributes())

  def GetAttributeNames(self):
    """Retrieves the names of all attributes.

    Returns:
      list[str]: attribute names, in column order.
    """
    return list(self.SCHEMA)

  def GetAttributes(self):
    """Retrieves the attribute names and values.

    Yields:
      tuple[str, object]: attribute name and value, in column order.
    """
    for attribute_name in self.SCHEMA:
      yield attribute_name, getattr(self, attribute_name, None)
