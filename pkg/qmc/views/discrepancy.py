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

from qmc.reports import discrepancy_report
from qmc.reports import generated_points
from qmc.reports import run_section
from qmc.serializers.requests import DiscrepancyRequestSerializer


class StarDiscrepancy(APIView):
    """
    Exact star discrepancy of posted points or of a generated block.
    """

    def post(self, request):
        serializer = DiscrepancyRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data

        config = data.get('config')
        if config is None:
            points = data['points']
            run = {'precision': data.get('precision')}
        else:
            points = generated_points(config, data['start'], data['count'])
            run = run_section(start=data['start'], count=data['count'], precision=data.get('precision'))
        return Response(discrepancy_report(points, data.get('precision'), config=config, run=run))
