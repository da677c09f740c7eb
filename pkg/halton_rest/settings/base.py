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

"""
Django settings for the halton_rest project.

The service has no database: every result is computed on request from the
base system and permutation documents posted by the caller.
"""

import os
from . import env

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

API_VERSION = '1.0.0'

# SECURITY WARNING: don't run with debug turned on in production!
if env.PROD_ENV:
    DEBUG = False
elif env.TEST_ENV:
    DEBUG = True
else:
    DEBUG = True

ALLOWED_HOSTS = ['*']

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'halton-rest-development-key')


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'qmc',
]

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': (),
    'DEFAULT_PERMISSION_CLASSES': (),
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'EXCEPTION_HANDLER': 'rest_framework.views.exception_handler'
}

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'halton_rest.urls'

WSGI_APPLICATION = 'halton_rest.wsgi.application'

DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Computation limits, see halton_rest.settings.env

QMC_ENUMERATION_CAP = env.ENUMERATION_CAP
QMC_STAR_DISCREPANCY_CAP = env.STAR_DISCREPANCY_CAP
QMC_DECIMAL_PRECISION = env.DECIMAL_PRECISION
QMC_LOG_PRECISION = env.LOG_PRECISION

# Preset TOML documents shipped with the qmc app
QMC_PRESET_DIR = os.path.join(BASE_DIR, 'qmc', 'fixtures')


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'qmc': {
            'handlers': ['console'],
            'level': env.LOG_LEVEL,
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': env.LOG_LEVEL,
        },
    },
}


# CELERY STUFF
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', 'redis://localhost:6379')
CELERY_ACCEPT_CONTENT = ['application/json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
