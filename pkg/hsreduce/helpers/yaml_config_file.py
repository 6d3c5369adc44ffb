# -*- coding: utf-8 -*-
"""YAML-based run configuration and preset files."""

import os

import yaml

from hsreduce import errors


class YAMLRunConfigFile(object):
  """YAML-based run configuration file.

  A run configuration file contains a single flat mapping of configuration
  field names to values, for example:

  length: 6
  representation: 'so4'
  jt: 5.5
  min_dim: 20
  """

  def _ReadFromFileObject(self, file_object):
    """Reads the configuration values from a file-like object.

    Args:
      file_object (file): configuration file-like object.

    Returns:
      dict[str, object]: configuration values per field name.

    Raises:
      ParseError: if the file does not contain a flat mapping.
    """
    try:
      yaml_values = yaml.safe_load(file_object)
    except yaml.YAMLError as exception:
      raise errors.ParseError(
          f'Unable to parse run configuration with error: {exception!s}')

    if yaml_values is None:
      return {}

    if not isinstance(yaml_values, dict):
      raise errors.ParseError('Run configuration is not a mapping.')

    for key, value in yaml_values.items():
      if not isinstance(key, str):
        raise errors.ParseError(f'Unsupported key: {key!s}')

      if isinstance(value, (dict, list)):
        raise errors.ParseError(f'Unsupported nested value of key: {key:s}')

    return yaml_values

  def ReadFromFile(self, path):
    """Reads the configuration values from a YAML file.

    Args:
      path (str): path to a run configuration file.

    Returns:
      dict[str, object]: configuration values per field name.
    """
    with open(path, 'r', encoding='utf-8') as file_object:
      return self._ReadFromFileObject(file_object)


class Preset(object):
  """Named run configuration preset.

  Attributes:
    description (str): description of the preset.
    name (str): name of the preset.
    values (dict[str, object]): configuration values per field name.
  """

  def __init__(self, name, description, values):
    """Initializes a preset.

    Args:
      name (str): name of the preset.
      description (str): description of the preset.
      values (dict[str, object]): configuration values per field name.
    """
    super(Preset, self).__init__()
    self.description = description
    self.name = name
    self.values = values


class YAMLPresetsFile(object):
  """YAML-based presets file.

  A YAML-based presets file contains one or more preset definitions. A preset
  definition consists of:

  name: 'paper-su2-strong'
  description: 'SU(2) representation, strong rung coupling'
  values:
    representation: 'su2'
    jt: 15.0

  Where:
  * name, unique identifier of the preset;
  * description, optional description of the preset;
  * values, flat mapping of configuration field names to values.
  """

  _SUPPORTED_KEYS = frozenset([
      'description',
      'name',
      'values'])

  def _ReadDefinition(self, definition_values):
    """Reads a preset definition from a dictionary.

    Args:
      definition_values (dict[str, object]): preset definition values.

    Returns:
      Preset: preset.

    Raises:
      ParseError: if the definition is not set or incorrect.
    """
    if not definition_values:
      raise errors.ParseError('Missing preset definition values.')

    if not isinstance(definition_values, dict):
      raise errors.ParseError('Preset definition is not a mapping.')

    different_keys = set(definition_values) - self._SUPPORTED_KEYS
    if different_keys:
      different_keys = ', '.join(sorted(different_keys))
      raise errors.ParseError(f'Undefined keys: {different_keys:s}')

    name = definition_values.get('name', None)
    if not name:
      raise errors.ParseError('Invalid preset definition missing name.')

    values = definition_values.get('values', None)
    if not values or not isinstance(values, dict):
      raise errors.ParseError(
          f'Invalid preset definition: {name:s} missing values.')

    description = definition_values.get('description', None) or ''
    return Preset(name, description, values)

  def _ReadFromFileObject(self, file_object):
    """Reads the preset definitions from a file-like object.

    Args:
      file_object (file): presets file-like object.

    Yields:
      Preset: preset.

    Raises:
      ParseError: if the file cannot be parsed.
    """
    try:
      for yaml_definition in yaml.safe_load_all(file_object):
        yield self._ReadDefinition(yaml_definition)

    except yaml.YAMLError as exception:
      raise errors.ParseError(
          f'Unable to parse presets with error: {exception!s}')

  def ReadFromFile(self, path):
    """Reads the preset definitions from a YAML file.

    Args:
      path (str): path to a presets file.

    Yields:
      Preset: preset.
    """
    with open(path, 'r', encoding='utf-8') as file_object:
      for preset in self._ReadFromFileObject(file_object):
        yield preset


def GetDefaultPresetsPath():
  """Retrieves the path of the presets file that comes with the package.

  Returns:
    str: path of the presets file.
  """
  package_path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
  return os.path.join(package_path, 'data', 'presets.yaml')


def ReadPresets(path=None):
  """Reads presets.

  Args:
    path (Optional[str]): path to a presets file, where None represents the
        presets file that comes with the package.

  Returns:
    dict[str, Preset]: presets per name.

  Raises:
    ParseError: if a preset is defined more than once.
  """
  presets_file = YAMLPresetsFile()

  presets = {}
  for preset in presets_file.ReadFromFile(path or GetDefaultPresetsPath()):
    if preset.name in presets:
      raise errors.ParseError(f'Preset: {preset.name:s} already defined.')

    presets[preset.name] = preset

  return presets
