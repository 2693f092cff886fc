# Copyright 2026 The NWE Authors
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

"""Orthogonal product state sets and exact triviality certification."""

from ._core import (
    Certificate,
    ConstructionDomainError,
    DimensionError,
    InputError,
    StateSet,
    TrivialityVerdict,
    ValidationError,
    check_pairwise_orthogonality,
    derive_certificate,
    expected_size_equal,
    expected_size_general,
    gen_equal,
    gen_general,
    inner_factors,
    local_inner,
    prior_sizes,
    run_cli,
    verdict,
    verify_all,
)

__all__ = [
    "Certificate",
    "ConstructionDomainError",
    "DimensionError",
    "InputError",
    "StateSet",
    "TrivialityVerdict",
    "ValidationError",
    "check_pairwise_orthogonality",
    "derive_certificate",
    "expected_size_equal",
    "expected_size_general",
    "gen_equal",
    "gen_general",
    "inner_factors",
    "local_inner",
    "prior_sizes",
    "run_cli",
    "verdict",
    "verify_all",
]
