# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~hesslab.common.log` module."""
import io
import logging

import pytest

from hesslab.common.log import HESSLAB_LOGGER, configure_logging


def test_configure_logging():
    """Test the `configure_logging` function replaces its handler and filters by level."""
    first = configure_logging('info', io.StringIO())
    stream = io.StringIO()
    second = configure_logging('warning', stream)

    try:
        assert first not in HESSLAB_LOGGER.handlers
        assert second in HESSLAB_LOGGER.handlers

        HESSLAB_LOGGER.getChild('triangulate').info('hidden')
        HESSLAB_LOGGER.getChild('triangulate').warning('shown')

        assert stream.getvalue() == 'WARNING [hesslab.triangulate] shown\n'
    finally:
        HESSLAB_LOGGER.removeHandler(second)
        HESSLAB_LOGGER.setLevel(logging.NOTSET)


def test_configure_logging_invalid():
    """Test the `configure_logging` function rejects an unknown level."""
    with pytest.raises(ValueError, match=r'`loud` is not a valid log level'):
        configure_logging('loud')
