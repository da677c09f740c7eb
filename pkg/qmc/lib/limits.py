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

import logging

from django.conf import settings

from qmc.exceptions import CapExceededError

logger = logging.getLogger(__name__)

_DEFAULTS = {
    'QMC_ENUMERATION_CAP': 10 ** 5,
    'QMC_STAR_DISCREPANCY_CAP': 10 ** 8,
    'QMC_DECIMAL_PRECISION': 15,
    'QMC_LOG_PRECISION': 30,
}


def setting(name):
    """
    Read a qmc limit from the Django settings, falling back to the built in
    default when the project does not define it.
    """
    if settings.configured:
        return getattr(settings, name, _DEFAULTS[name])
    return _DEFAULTS[name]


def resolve_cap(cap, name='QMC_ENUMERATION_CAP'):
    return setting(name) if cap is None else cap


def enforce_cap(size, cap, what, name='QMC_ENUMERATION_CAP'):
    """
    Refuse a computation whose size exceeds the cap.

    Parameters
    ----------
    size : int
        Number of elementary steps the computation would take
    cap : int or None
        Explicit cap, None to use the configured one
    what : str
        Human readable name of the computation, used in the error

    Returns
    -------
    int
        The cap that was applied
    """
    limit = resolve_cap(cap, name)
    if size > limit:
        logger.warning("Refusing %s: size %d exceeds cap %d", what, size, limit)
        raise CapExceededError(
            "{} needs {} steps, above the cap of {}".format(what, size, limit)
        )
    return limit
