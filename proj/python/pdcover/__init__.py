# Copyright 2026 The pdcover Authors.
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

"""Primal-dual greedy solver for weighted integer covering problems.

The heavy lifting lives in the C++ extension; this package adds small
conveniences for passing instances around as dicts.
"""

import json as _json

from ._core import generate, oracle, solve, validate  # noqa: F401

__all__ = ["solve", "validate", "oracle", "generate", "solve_dict", "validate_dict",
           "oracle_dict"]


def _as_text(instance):
    if isinstance(instance, str):
        return instance
    return _json.dumps(instance)


def solve_dict(instance, **kwargs):
    """Solve an instance given as a dict (or JSON string)."""
    return solve(_as_text(instance), **kwargs)


def validate_dict(instance, **kwargs):
    return validate(_as_text(instance), **kwargs)


def oracle_dict(instance, **kwargs):
    return oracle(_as_text(instance), **kwargs)
