# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/mesh/__init__.py
# Description: 网格与 P1 有限元组装接口

from .types import Mesh
from .mesh import build_unit_square_mesh, restrict_to
from .assemble import (assemble_stiffness, assemble_mass, assemble_weighted_mass,
                       assemble_nonlinear, assemble_bulk_jacobian, quadrature_nonlinear)
from .quadrature import BARYCENTRIC, WEIGHTS, at_quadrature, integrate, quadrature_points
from .boundary import interpolate_boundary
