# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/solver/__init__.py
# Description: 正问题求解器接口

from .config import SolverConfig
from .types import (BranchClass, BranchMismatchWarning, BranchSeed, NonConvergence,
                    SingularLinearSolve, SolveReport, SolverError)
from .newton import energy, jacobian, newton_solve, residual
from .branch import branch_seed, classify_branch, corner_values, solve_branch
