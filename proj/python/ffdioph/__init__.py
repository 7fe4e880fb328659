# Copyright 2026 The ffdioph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact Diophantine approximation over F_q((1/X)).

The heavy lifting lives in the ``_core`` extension; this package re-exports
its surface unchanged.
"""

from ._core import (  # noqa: F401
    Field,
    FfdiophError,
    TestFunction,
    __version__,
    cf_expand_rational_source,
    cf_rational,
    cf_stream,
    cusp_distance,
    group_ball_count,
    hamenstadt_val,
    integrate_psi_delta,
    orbit_count,
    parabolic_ball_count,
    poly_deg,
    poly_format,
    run_experiment,
    shadow_measure,
    solutions,
    tent_profile,
    window_measure,
)

__all__ = [
    "Field",
    "FfdiophError",
    "TestFunction",
    "__version__",
    "cf_expand_rational_source",
    "cf_rational",
    "cf_stream",
    "cusp_distance",
    "group_ball_count",
    "hamenstadt_val",
    "integrate_psi_delta",
    "orbit_count",
    "parabolic_ball_count",
    "poly_deg",
    "poly_format",
    "run_experiment",
    "shadow_measure",
    "solutions",
    "tent_profile",
    "window_measure",
]
