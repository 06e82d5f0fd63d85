# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/version.py
# Description: 版本

__version__ = '0.1.0'
