# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import logging
import os
import warnings

from . import exceptions

logger = logging.getLogger("hitset")

ENV_PREFIX = "HITSET_"

# Option name -> default value. All values are kept as strings, the parsed
# form is available as attributes of `Options`.
DEFAULT_OPTIONS = {
    "EPSILON": "1e-9",
    "WORKERS": "1",
    "ORACLE_MAX_N": "20",
    "GEN_RETRIES": "1000",
    "LINF_PRUNE": "y",
}

# Read elsewhere, not options.
_ENV_ONLY = ("LOG_LEVEL",)

_TRUE = ("y", "yes", "true", "1", "on")
_FALSE = ("n", "no", "false", "0", "off")


def _parse_positive_float(value):
    v = float(value)
    if not v > 0 or v != v or v == float("inf"):
        raise ValueError("must be a finite positive number")
    return v


def _parse_int_range(lo, hi=None):
    def parse(value):
        v = int(value)
        if v < lo or (hi is not None and v > hi):
            if hi is None:
                raise ValueError("must be >= %d" % lo)
            raise ValueError("must be in [%d, %d]" % (lo, hi))
        return v

    return parse


def _parse_bool(value):
    v = value.strip().lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise ValueError("expected y or n")


_PARSERS = {
    "EPSILON": _parse_positive_float,
    "WORKERS": _parse_int_range(1),
    "ORACLE_MAX_N": _parse_int_range(1, 25),
    "GEN_RETRIES": _parse_int_range(1),
    "LINF_PRUNE": _parse_bool,
}


class Options:
    """Parsed, immutable set of hitset options.

    Parameters
    ----------
    raw: dict
        Option name (without the ``HITSET_`` prefix) to string value.
        Unknown names and unparsable values raise `HitsetConfigError`.
    """

    def __init__(self, raw):
        self._raw = dict(DEFAULT_OPTIONS)
        for name, value in raw.items():
            if name not in _PARSERS:
                raise exceptions.HitsetConfigError(
                    "unknown option %r, valid options are: %s"
                    % (name, ", ".join(sorted(_PARSERS)))
                )
            self._raw[name] = str(value)
        parsed = {}
        for name, value in self._raw.items():
            try:
                parsed[name] = _PARSERS[name](value)
            except ValueError as e:
                raise exceptions.HitsetConfigError(
                    "invalid value %r for option %s: %s" % (value, name, e)
                ) from None
        self.epsilon = parsed["EPSILON"]
        self.workers = parsed["WORKERS"]
        self.oracle_max_n = parsed["ORACLE_MAX_N"]
        self.gen_retries = parsed["GEN_RETRIES"]
        self.linf_prune = parsed["LINF_PRUNE"]

    def as_dict(self):
        return dict(self._raw)

    def __repr__(self):
        return "<Options %s>" % " ".join(
            "%s=%s" % kv for kv in sorted(self._raw.items())
        )


def _env_options():
    for key in os.environ:
        name = key[len(ENV_PREFIX) :]
        if not key.startswith(ENV_PREFIX) or name in _ENV_ONLY:
            continue
        if name not in DEFAULT_OPTIONS:
            warnings.warn(
                "ignoring unknown environment variable %s" % key,
                exceptions.HitsetWarning,
            )
    return {
        name: os.environ[ENV_PREFIX + name]
        for name in DEFAULT_OPTIONS
        if ENV_PREFIX + name in os.environ
    }


# The active options are created lazily on first use so that environment
# variables set after import are still honoured.
_ctx = None


def _get_ctx():
    global _ctx
    if _ctx is None:
        _ctx = Options(_env_options())
        logger.debug("created default options %r", _ctx)
    return _ctx


def init(options=None, env_takes_precedence=False):
    """Initiate hitset with explicit options.

    Usually this is done automatically at the first solver call, but this
    function makes it possible to set options programmatically.
    Alternatively, options can be specified through environment variables
    prefixed with ``HITSET_``, e.g. ``HITSET_WORKERS=4``.

    Parameters
    ----------
    options: dict, optional
        Option names (without prefix) mapped to string values.
    env_takes_precedence: bool, optional
        Whether environment variables takes precedence over the `options`
        specified here.
    """
    global _ctx
    if _ctx is not None:
        raise exceptions.HitsetError(
            "hitset is already initiated. Call reset() and init() "
            "in order to re-initiate hitset with new options."
        )
    merged = {}
    env = _env_options()
    if env_takes_precedence:
        merged.update(options or {})
        merged.update(env)
    else:
        merged.update(env)
        merged.update(options or {})
    _ctx = Options(merged)
    logger.debug("initiated with %r", _ctx)


def get_config():
    """Returns all hitset configuration options as a dict.

    If hitset is initialized, the options returned are the active options,
    otherwise the options hitset would be initialized with now.
    Notice, this function doesn't initialize hitset.

    Returns
    -------
    dict
        The option names mapped to their string values
    """
    if _ctx is None:
        return Options(_env_options()).as_dict()
    return _ctx.as_dict()


def reset():
    """Drop the active options.

    The options are re-read from the environment at the next call.
    """
    global _ctx
    _ctx = None
