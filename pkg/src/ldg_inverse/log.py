# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/log.py
# Description: 日志相关配置

import sys

from loguru import logger
from tqdm import tqdm

CONSOLE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | <lvl><normal>{level: <8}</normal></lvl> | {message}"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message}"


def _tqdm_sink(message) -> None:
    tqdm.write(message, end='')


def set_logger(console: bool = False,
               file: bool = True,
               *,
               level: str = 'INFO',
               file_level: str = None,
               use_tqdm: bool = True,
               file_path: str = None,
               log_format: str = None,
               zip: str = None) -> None:
    """ 设置日志, 库内各模块只写日志不配置 sink, 由调用方 (CLI) 统一设置

    Args:
        console (bool, optional): 输出到控制台. Defaults to False.
        file (bool, optional): 输出到文件. Defaults to True.
        level (str, optional): 控制台日志等级, 牛顿迭代细节在 TRACE 级别. Defaults to 'INFO'.
        file_level (str, optional): 文件日志等级, 缺省与 level 相同. Defaults to None.
        use_tqdm (bool, optional): 使用 tqdm.write 作为控制台 sink, 与进度条共存. Defaults to True.
        file_path (str, optional): 文件路径, 缺省写到 logs 目录下. Defaults to None.
        log_format (str, optional): 同时覆盖控制台与文件的日志格式. Defaults to None.
        zip (str, optional): 文件压缩格式. Defaults to None.
    """
    logger.remove()

    if console:
        logger.add(_tqdm_sink if use_tqdm else sys.stderr,
                   format=log_format or CONSOLE_FORMAT, level=level, colorize=True)
    if file:
        logger.add(file_path or 'logs/{time}.log',
                   format=log_format or FILE_FORMAT, level=file_level or level,
                   retention=10, compression=zip)
