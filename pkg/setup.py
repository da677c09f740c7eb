"""
.. See the NOTICE file distributed with this work for additional information
   regarding copyright ownership.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""

from setuptools import setup, find_packages

setup(
    name='halton_rest',
    version='1.0.0',
    description='Exact generalized Halton sequences and discrepancy witnesses',
    packages=find_packages(exclude=['examples', 'examples.*']),
    py_modules=['manage'],
    include_package_data=True,
    package_data={
        'qmc': ['fixtures/bases/*.toml', 'fixtures/perms/*.toml', 'fixtures/golden/*'],
    },
    python_requires='>=3.10',
    install_requires=[
        'Django>=4.2,<5.0',
        'djangorestframework>=3.14',
        'celery>=5.3',
        'redis>=4.5',
        'mpmath>=1.3',
        'tomli>=1.1; python_version < "3.11"',
    ],
    setup_requires=[
        'pytest-runner',
    ],
    tests_require=[
        'pytest',
        'pytest-django',
        'mock',
    ],
    entry_points={
        'console_scripts': [
            'halton=manage:main',
        ],
    },
)
