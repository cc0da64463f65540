# -*- coding: utf-8 -*-
"""Logging for the `hesslab` package.

The library only emits records on the ``hesslab`` logger and its children; attaching handlers is left to the
application, which for the command line interface happens in :func:`configure_logging`.
"""
import logging

__all__ = ('HESSLAB_LOGGER', 'LOG_LEVELS', 'configure_logging')

HESSLAB_LOGGER = logging.getLogger('hesslab')
HESSLAB_LOGGER.addHandler(logging.NullHandler())

LOG_LEVELS = {
    'debug': logging.DEBUG,
    'info': logging.INFO,
    'warning': logging.WARNING,
    'error': logging.ERROR,
}


def configure_logging(level: str = 'warning', stream=None) -> logging.Handler:
    """Attach a single stream handler to the package logger with the given level.

    Calling this repeatedly replaces the handler installed by a previous call instead of stacking them.

    :param level: one of the keys of ``LOG_LEVELS``.
    :param stream: the stream to write to, defaults to ``sys.stderr``.
    :return: the installed handler.
    :raises ValueError: if the level is not recognized.
    """
    try:
        numeric_level = LOG_LEVELS[level]
    except KeyError as exception:
        raise ValueError(f'`{level}` is not a valid log level, choose from {", ".join(LOG_LEVELS)}.') from exception

    for handler in list(HESSLAB_LOGGER.handlers):
        if getattr(handler, '_hesslab_handler', False):
            HESSLAB_LOGGER.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter('%(levelname)s [%(name)s] %(message)s'))
    handler._hesslab_handler = True  # pylint: disable=protected-access
    HESSLAB_LOGGER.addHandler(handler)
    HESSLAB_LOGGER.setLevel(numeric_level)

    return handler
