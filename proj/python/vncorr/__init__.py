# Copyright 2026 The vncorr Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Measurement-induced correlations of bipartite density matrices."""

from ._vncorr import (
    DEFAULT_SEED,
    CorrelationReport,
    InvalidInput,
    ValidationError,
    WitnessEstimate,
    correlations,
    family_correlation,
    family_state,
    load_state,
    minimize,
    pure_state_correlation,
    purity,
    q_fixed,
    screen,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEED",
    "CorrelationReport",
    "InvalidInput",
    "ValidationError",
    "WitnessEstimate",
    "correlations",
    "family_correlation",
    "family_state",
    "load_state",
    "minimize",
    "pure_state_correlation",
    "purity",
    "q_fixed",
    "screen",
    "witness",
]
