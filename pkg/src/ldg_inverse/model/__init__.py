# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: ldg_inverse/model/__init__.py
# Description: 约化 Landau-de Gennes 模型接口

from .types import DielectricTensor, Director, MaterialParams, QField, ReducedParams
from .params import (MBBA, material_from_reduced, material_from_reduced_general,
                     reduced_from_material, reduced_from_material_general, special_temperature)
from .boundary import BCSpec, TangentBC, VortexBC, tangent_bc, vortex_bc
from .director import DirectorField, director, director_field, qfield_from_director
from .optics import berreman_matrix, dielectric_from_q, lift_to_3d, q_from_dielectric, stokes
