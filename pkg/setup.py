#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Installation and deployment script."""

import os
import pkg_resources
import sys

try:
  from setuptools import find_packages, setup
except ImportError:
  from distutils.core import find_packages, setup

try:
  from distutils.command.bdist_rpm import bdist_rpm
except ImportError:
  bdist_rpm = None

version_tuple = (sys.version_info[0], sys.version_info[1])
if version_tuple < (3, 7):
  print(f'Unsupported Python version: {sys.version:s}, version 3.7 or higher '
        f'required.')
  sys.exit(1)

# Change PYTHONPATH to include hsreduce so that we can get the version.
sys.path.insert(0, '.')

import hsreduce  # pylint: disable=wrong-import-position


if not bdist_rpm:
  BdistRPMCommand = None
else:
  class BdistRPMCommand(bdist_rpm):
    """Custom handler for the bdist_rpm command."""

    # pylint: disable=invalid-name
    def _make_spec_file(self):
      """Generates the text of an RPM spec file.

      Returns:
        list[str]: lines of the RPM spec file.
      """
      spec_file = super(BdistRPMCommand, self)._make_spec_file()

      description = []
      requires = ''
      summary = ''
      in_description = False

      python_spec_file = []
      for line in iter(spec_file):
        if line.startswith('Summary: '):
          summary = line[9:]

        elif line.startswith('BuildRequires: '):
          line = 'BuildRequires: python3-setuptools, python3-devel'

        elif line.startswith('Requires: '):
          requires = line[10:]
          continue

        elif line.startswith('%description'):
          in_description = True

        elif line.startswith('python setup.py build'):
          line = '%py3_build'

        elif line.startswith('python setup.py install'):
          line = '%py3_install'

        elif line.startswith('%files'):
          python_spec_file.extend([
              '%files -n python3-%{name}',
              '%defattr(644,root,root,755)',
              '%{_bindir}/hsreduce',
              '%{python3_sitelib}/hsreduce/*.py',
              '%{python3_sitelib}/hsreduce/*/*.py',
              '%{python3_sitelib}/hsreduce/data/*.yaml',
              '%{python3_sitelib}/hsreduce*.egg-info/*',
              '',
              '%exclude %{_prefix}/share/doc/*',
              '%exclude %{python3_sitelib}/hsreduce/__pycache__/*',
              '%exclude %{python3_sitelib}/hsreduce/*/__pycache__/*'])
          break

        elif line.startswith('%prep'):
          in_description = False

          python_spec_file.append('%package -n python3-%{name}')
          if requires:
            python_spec_file.append(f'Requires: {requires:s}')

          python_spec_file.extend([
              f'Summary: Python 3 module of {summary:s}',
              '',
              '%description -n python3-%{name}'])

          python_spec_file.extend(description)

        elif in_description:
          # Ignore leading white lines in the description.
          if not description and not line:
            continue

          description.append(line)

        python_spec_file.append(line)

      return python_spec_file


def parse_requirements_from_file(path):
  """Parses requirements from a requirements file.

  Args:
    path (str): path to the requirements file.

  Returns:
    list[str]: name and optional version information of the required packages.
  """
  requirements = []
  if os.path.isfile(path):
    with open(path, 'r') as file_object:
      file_contents = file_object.read()

    for requirement in pkg_resources.parse_requirements(file_contents):
      try:
        name = str(requirement.req)
      except AttributeError:
        name = str(requirement)

      requirements.append(name)

  return requirements


hsreduce_description = (
    'Hilbert Space Reduction (HSReduce) of frustrated two-leg spin ladders.')

hsreduce_long_description = (
    'HSReduce eliminates basis states of the M=0 subspace of a frustrated '
    'two-leg Heisenberg spin ladder one at a time, in the product spin or the '
    'rung singlet-triplet basis, and renormalizes the rung coupling so that '
    'the ground state energy stays fixed.')

command_classes = {}
if BdistRPMCommand:
  command_classes['bdist_rpm'] = BdistRPMCommand

setup(
    name='hsreduce',
    version=hsreduce.__version__,
    description=hsreduce_description,
    long_description=hsreduce_long_description,
    long_description_content_type='text/plain',
    license='Apache License, Version 2.0',
    cmdclass=command_classes,
    classifiers=[
        'Environment :: Console',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    packages=find_packages('.', exclude=['docs', 'tests', 'tests.*']),
    package_dir={
        'hsreduce': 'hsreduce'
    },
    package_data={
        'hsreduce': ['data/*.yaml']
    },
    entry_points={
        'console_scripts': ['hsreduce=hsreduce.cli:Main']
    },
    install_requires=parse_requirements_from_file('requirements.txt'),
    tests_require=parse_requirements_from_file('test_requirements.txt'),
)
