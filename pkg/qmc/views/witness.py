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

from rest_framework.views import APIView
from rest_framework.response import Response

from qmc.lib.config import parse_point
from qmc.reports import witness_report
from qmc.serializers.requests import WitnessRequestSerializer


class BuildWitness(APIView):
    """
    Witness plan, boxes, closed forms and structural checks for one horizon.
    """

    def post(self, request):
        serializer = WitnessRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data

        config = data['config']
        x0 = parse_point(config.system, data.get('x'), data.get('x_digits'))
        report, passed = witness_report(config, data.get('mfrak'), data.get('n'), x0)
        report['passed'] = passed
        return Response(report)
