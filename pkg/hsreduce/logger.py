# -*- coding: utf-8 -*-
"""The HSReduce logger."""

import logging


_logger = logging.getLogger('hsreduce')

# Mimic the logging module interface.
debug = _logger.debug
error = _logger.error
exception = _logger.exception
info = _logger.info
warning = _logger.warning
