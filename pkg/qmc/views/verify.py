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

from celery.result import AsyncResult

from rest_framework import status
from rest_framework.views import APIView
from rest_framework.response import Response

from qmc.serializers.requests import VerifyRequestSerializer
from qmc.tasks import verify_run_task


class SubmitVerification(APIView):
    """
    Queue a verification run, poll it at verify/task/<task_id>/
    """

    def post(self, request):
        serializer = VerifyRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)

        task = verify_run_task.delay(**serializer.task_kwargs())
        return Response({"task_id": task.id}, status=status.HTTP_202_ACCEPTED)


class CheckVerificationStatus(APIView):

    def get(self, request, task_id):
        result = AsyncResult(task_id)

        # PENDING, STARTED, VERIFYING, SUCCESS or FAILURE
        response = {"task_id": task_id, "status": result.status}
        if result.successful():
            response["result"] = result.result
        elif result.failed():
            response["error"] = str(result.result)
        return Response(response)
