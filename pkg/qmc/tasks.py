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

from celery import shared_task
from celery.utils.log import get_task_logger

from qmc.reports import run_verification

logger = get_task_logger(__name__)


@shared_task(name="verify_run", bind=True, track_started=True)
def verify_run_task(self, **kwargs):
    """
    Run one verification mode from raw documents and return the report.
    """
    logger.info("Executing verification job id {0.id}".format(self.request))
    self.update_state(state="VERIFYING", meta={'mode': kwargs.get('mode')})

    report, passed = run_verification(**kwargs)
    if not passed:
        logger.warning("Verification job {0.id} found failing checks".format(self.request))

    return report
