"""
Django settings for hadamard_lab project.
"""

import os
import sys
from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Add lib directory to Python path
sys.path.insert(0, os.path.join(BASE_DIR, 'lib'))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='hadamard-lab-development-key')

DEBUG = config('DEBUG', default=True, cast=bool)
ENVIRONMENT = config('ENVIRONMENT', default='development')

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # Third-party apps
    'rest_framework',

    # Local apps
    'core',
    'verification',
]

# Nothing is persisted; reports go to stdout or --out files.
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# REST Framework settings (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'UNICODE_JSON': False,
    'COMPACT_JSON': False,
    'COERCE_DECIMAL_TO_STRING': True,
}

# Logging
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'lib': {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False},
        'core': {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False},
        'verification': {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False},
    },
}

# Groebner engine budgets: exceeding either is a reported error
GROEBNER_PAIR_BUDGET = config('GROEBNER_PAIR_BUDGET', default=1_000_000, cast=int)
GROEBNER_TERM_BUDGET = config('GROEBNER_TERM_BUDGET', default=200_000, cast=int)

# Fast modular mode: largest prime below 2**16
MODULAR_PRIME = config('MODULAR_PRIME', default=65521, cast=int)

# Hilbert function tables are reported for degrees 0..HILBERT_TRUNCATION
HILBERT_TRUNCATION = config('HILBERT_TRUNCATION', default=5, cast=int)

# Random sampling of points and generic instances
SAMPLING_RANGE = config('SAMPLING_RANGE', default=100, cast=int)
SAMPLING_RETRIES = config('SAMPLING_RETRIES', default=100, cast=int)
GENERIC_RETRIES = config('GENERIC_RETRIES', default=10, cast=int)
TERRACINI_SEEDS = config('TERRACINI_SEEDS', default=5, cast=int)

# Singular locus: try the randomized smoothness certificate first
SINGULAR_PRECHECK = config('SINGULAR_PRECHECK', default=True, cast=bool)
SINGULAR_PRECHECK_PAIRS = config('SINGULAR_PRECHECK_PAIRS', default=2000, cast=int)

# Generic suite driver
SUITE_WORKERS = config('SUITE_WORKERS', default=1, cast=int)
SUITE_MAX_SUM_R = config('SUITE_MAX_SUM_R', default=4, cast=int)
SUITE_MAX_DEGREE = config('SUITE_MAX_DEGREE', default=3, cast=int)
SUITE_MAX_AMBIENT = config('SUITE_MAX_AMBIENT', default=12, cast=int)
