# -*- coding: utf-8 -*-
"""Schema helper."""

import math

from hsreduce import interface


class FloatSerializer(interface.AttributeSerializer):
  """Float serializer, 17 significant digits so values round-trip exactly."""

  def DeserializeValue(self, value):
    """Deserializes a value.

    Args:
      value (str): serialized value.

    Returns:
      float: runtime value or None if not set.
    """
    if value == '':
      return None

    return float(value)

  def SerializeValue(self, value):
    """Serializes a value.

    Args:
      value (float): runtime value.

    Returns:
      str: serialized value.
    """
    if value is None:
      return ''

    value = float(value)
    if math.isnan(value):
      return 'nan'

    return f'{value:.17g}'


class IntegerSerializer(interface.AttributeSerializer):
  """Integer serializer."""

  def DeserializeValue(self, value):
    """Deserializes a value.

    Args:
      value (str): serialized value.

    Returns:
      int: runtime value or None if not set.
    """
    if value == '':
      return None

    return int(value, 10)

  def SerializeValue(self, value):
    """Serializes a value.

    Args:
      value (int): runtime value.

    Returns:
      str: serialized value.
    """
    if value is None:
      return ''

    return f'{int(value):d}'


class StringSerializer(interface.AttributeSerializer):
  """String serializer."""

  def DeserializeValue(self, value):
    """Deserializes a value.

    Args:
      value (str): serialized value.

    Returns:
      str: runtime value.
    """
    return value

  def SerializeValue(self, value):
    """Serializes a value.

    Args:
      value (str): runtime value.

    Returns:
      str: serialized value.
    """
    if value is None:
      return ''

    return f'{value!s}'


class SchemaHelper(object):
  """Maps the data types of record container schemas to serializers."""

  _data_types = {
      'float': FloatSerializer(),
      'int': IntegerSerializer(),
      'str': StringSerializer()}

  @classmethod
  def GetAttributeSerializer(cls, data_type):
    """Retrieves the attribute serializer of a data type.

    Args:
      data_type (str): data type.

    Returns:
      AttributeSerializer: attribute serializer or None if not available.
    """
    return cls._data_types.get(data_type, None)
