"""
Settings lookup for the algebra library.

The library reads its tunables from Django settings when a settings module is
configured and falls back to the given default otherwise, so it can also be
used from a plain Python session.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def setting(name, default):
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default
