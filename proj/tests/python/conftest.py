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

"""Locates the compiled extension and the repository fixtures.

The ctest entry exports EBG_PYMODULE_DIR pointing at the CMake output
directory; prepend it (and the in-tree pure-python package) to sys.path so
``import ebgverify`` works without installation.
"""

import os
import pathlib
import sys

import pytest

_REPO_ROOT = pathlib.Path(__file__).resolve().parents[2]

_module_dir = os.environ.get("EBG_PYMODULE_DIR")
if _module_dir:
    sys.path.insert(0, _module_dir)
sys.path.insert(0, str(_REPO_ROOT / "python"))


@pytest.fixture(scope="session")
def games_dir():
    return _REPO_ROOT / "games"
