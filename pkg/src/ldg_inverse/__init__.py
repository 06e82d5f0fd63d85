# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/__init__.py
# Description: ldg_inverse

from .log import set_logger, logger
from .version import __version__
