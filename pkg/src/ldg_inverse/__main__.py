# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/__main__.py
# Description: python -m ldg_inverse

import sys

from .cli import main

sys.exit(main())
