# SPDX-License-Identifier: Apache-2.0
#
# fdamimo: adaptive target detection for FDA-MIMO radar with training data.
# Copyright (C) 2026 The fdamimo authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""FDA-MIMO adaptive detection."""

from ._core import (
    ArgumentError,
    NumericError,
    doppler_vector,
    glrt_no,
    joint_steering,
    pd,
    pfa,
    rao_no,
    run,
    statistics,
    threshold,
    validate_config,
    wald_no,
)

__all__ = [
    "ArgumentError",
    "NumericError",
    "doppler_vector",
    "glrt_no",
    "joint_steering",
    "pd",
    "pfa",
    "rao_no",
    "run",
    "statistics",
    "threshold",
    "validate_config",
    "wald_no",
]
