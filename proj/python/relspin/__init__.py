# Copyright 2026 The relspin Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Relativistic spin measurement scenarios."""

from ._core import (
    boost_matrix,
    closed_form_expectation,
    fields_in_frame,
    fig2_geometry,
    frame_check,
    momentum_from_velocity,
    paradox_demo,
    pl_expectation,
    RelspinError,
    rotation_matrix,
    scan_fig1,
    sg_expectation,
    two_apparatus_pl,
    two_apparatus_sg,
    wigner_rotation,
)

__all__ = [
    "boost_matrix",
    "closed_form_expectation",
    "fields_in_frame",
    "fig2_geometry",
    "frame_check",
    "momentum_from_velocity",
    "paradox_demo",
    "pl_expectation",
    "RelspinError",
    "rotation_matrix",
    "scan_fig1",
    "sg_expectation",
    "two_apparatus_pl",
    "two_apparatus_sg",
    "wigner_rotation",
]
