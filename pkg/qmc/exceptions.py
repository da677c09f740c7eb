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

from rest_framework.exceptions import APIException


class QmcException(APIException):
    """
    Base class of every failure raised by the qmc library.

    Carries an HTTP status for the REST layer and a process exit code for
    the management commands.
    """
    status_code = 500
    default_detail = "Quasi-Monte Carlo computation failed."
    default_code = 'qmc_error'
    exit_code = 1


class ConfigurationError(QmcException):
    """
    Malformed or inconsistent base system, permutation family, point or
    run parameters.
    """
    status_code = 400
    default_detail = "Invalid configuration."
    default_code = 'invalid_configuration'
    exit_code = 2


class HorizonOverflowError(QmcException):
    """
    An index, carry or witness horizon needs more digits than the working
    depth J holds.
    """
    status_code = 422
    default_detail = "Computation exceeds the working digit depth."
    default_code = 'horizon_overflow'
    exit_code = 2


class CapExceededError(QmcException):
    """
    A brute-force enumeration or exact discrepancy sweep is larger than the
    configured cap.
    """
    status_code = 413
    default_detail = "Computation exceeds the configured cap."
    default_code = 'cap_exceeded'
    exit_code = 3


class IdentityFailure(QmcException):
    """
    A verified identity or inequality does not hold.
    """
    status_code = 500
    default_detail = "A verified identity does not hold."
    default_code = 'identity_failure'
    exit_code = 1
