# -*- coding: utf-8 -*-
import os
import logging


VERTEX_CAP_ENV_VAR = 'ZEROFORCING_VERTEX_CAP'
SEARCH_CAP_ENV_VAR = 'ZEROFORCING_SEARCH_CAP'
GRUNDY_CAP_ENV_VAR = 'ZEROFORCING_GRUNDY_CAP'
MATRIX_CAP_ENV_VAR = 'ZEROFORCING_MATRIX_CAP'
FIELD_CAP_ENV_VAR = 'ZEROFORCING_FIELD_CAP'
MAX_SECONDS_ENV_VAR = 'ZEROFORCING_MAX_SECONDS'
WORKERS_ENV_VAR = 'ZEROFORCING_WORKERS'

DEFAULT_LIMITS = {
    VERTEX_CAP_ENV_VAR: 2 ** 20,
    SEARCH_CAP_ENV_VAR: 40,
    GRUNDY_CAP_ENV_VAR: 24,
    MATRIX_CAP_ENV_VAR: 2 ** 13,
    FIELD_CAP_ENV_VAR: 16,
    MAX_SECONDS_ENV_VAR: None,
    WORKERS_ENV_VAR: 1,
}

log = logging.getLogger(__name__)


class Error(Exception):
    """Base exception class for this module"""
    pass


class SizingError(Error):
    """A count exceeds a configured cap or the native word width."""
    pass


class HypothesisError(Error):
    """A precondition or the hypothesis of a closed form does not hold."""
    pass


class FieldError(HypothesisError):
    pass


class DimensionError(Error):
    pass


class DataReadError(Error):
    pass


class JSONReadError(Error):
    pass


class CapExceededError(Error):
    """
        Raised when a search gives up because of a cap or a timeout.
        The partial (bounds-only) result travels with the exception.
    """
    def __init__(self, message, partial=None):
        super(CapExceededError, self).__init__(message)
        self.partial = partial


def get_limit(env_var, override=None):
    """
        Returns the value of a cap: the explicit override when given,
        otherwise the environment variable, otherwise the built-in default.
        A malformed environment value is logged and ignored.
    """
    if override is not None:
        return override

    default = DEFAULT_LIMITS[env_var]
    value_str = os.environ.get(env_var)
    if not value_str:
        return default

    try:
        if env_var == MAX_SECONDS_ENV_VAR:
            return float(value_str)
        return int(value_str)
    except ValueError:
        log.error('Failed parsing %s="%s". Please use a valid number!',
                  env_var, value_str)
    return default


def check_cap(count, env_var, override=None, what="vertices"):
    """Raises SizingError when count exceeds the cap named by env_var."""
    cap = get_limit(env_var, override)
    if count > cap:
        raise SizingError("%s %s exceeds the cap of %s (%s)" %
                          (count, what, cap, env_var))
    return count


class BaseAPI(object):
    """
        Base class for every configurable object of the package.

        Caps are read from the environment at construction time and can be
        overridden by keyword arguments, e.g. ``Manager(search_cap=20)``.
    """
    def __init__(self, *args, **kwargs):
        self.vertex_cap = get_limit(VERTEX_CAP_ENV_VAR)
        self.search_cap = get_limit(SEARCH_CAP_ENV_VAR)
        self.grundy_cap = get_limit(GRUNDY_CAP_ENV_VAR)
        self.matrix_cap = get_limit(MATRIX_CAP_ENV_VAR)
        self.field_cap = get_limit(FIELD_CAP_ENV_VAR)
        self.max_seconds = get_limit(MAX_SECONDS_ENV_VAR)
        self.workers = get_limit(WORKERS_ENV_VAR)
        self._log = logging.getLogger(__name__)

        for attr in kwargs.keys():
            setattr(self, attr, kwargs[attr])

        if self.workers is None or self.workers < 1:
            raise HypothesisError("workers must be >= 1, got %r" % self.workers)

    def __getstate__(self):
        state = self.__dict__.copy()
        # The logger is not pickleable due to using thread.lock
        del state['_log']
        return state

    def __setstate__(self, state):
        self.__dict__ = state
        self._log = logging.getLogger(__name__)

    def __str__(self):
        return "<%s>" % self.__class__.__name__

    def __repr__(self):
        return str(self)
