# Copyright 2026 the ebgverify authors
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

"""Verification toolkit for iterated electric boolean games.

This package is a thin wrapper over the compiled extension module: it parses
game and strategy descriptions, checks feasibility of strategy profiles,
searches for rational deviations, decides Nash-equilibrium membership, and
answers endowment-redistribution queries.  All results carry checkable
witnesses (violation steps, deviation strategies, redistributed endowments).
"""

try:
    # Installed layout: the extension lives inside this package.
    from ebgverify._ebgverify import (
        EbgError,
        Game,
        RunRequest,
        Strategy,
        check_ne,
        deviation,
        feasible,
        parse_game,
        parse_strategy,
        payoff,
        rational_construction,
        rational_elimination,
        run,
        serialize_strategy,
    )
except ImportError:
    # Development layout: the extension sits on sys.path (e.g. the CMake
    # build directory).
    from _ebgverify import (
        EbgError,
        Game,
        RunRequest,
        Strategy,
        check_ne,
        deviation,
        feasible,
        parse_game,
        parse_strategy,
        payoff,
        rational_construction,
        rational_elimination,
        run,
        serialize_strategy,
    )

__version__ = "0.1.0"

__all__ = [
    "EbgError",
    "Game",
    "RunRequest",
    "Strategy",
    "check_ne",
    "deviation",
    "feasible",
    "parse_game",
    "parse_strategy",
    "payoff",
    "rational_construction",
    "rational_elimination",
    "run",
    "serialize_strategy",
]
