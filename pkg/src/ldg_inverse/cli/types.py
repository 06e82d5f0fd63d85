# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/cli/types.py
# Description: 命令行异常与退出码

from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION = 2
    SOLVER = 3
    REPRODUCTION = 4


class ConfigError(ValueError):
    pass


class MeshMismatch(ValueError):
    pass


class GenerationFailure(RuntimeError):
    pass


class ReproductionFailure(RuntimeError):
    """ 复现结果超出容差, failures 为未通过的检查描述
    """

    def __init__(self, failures: list[str]) -> None:
        super().__init__(f'{len(failures)} 项检查未通过: ' + '; '.join(failures))
        self.failures = failures
