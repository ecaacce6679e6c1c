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

"""CMake-driven build of the compiled extension.

The extension is produced by the project's own CMake configuration (target
``_ebgverify``) and placed inside the ``ebgverify`` package so that
``ebgverify._ebgverify`` resolves after installation.  Requires a system
CMake (>= 3.20) and a C++20 compiler; install with
``pip install -e . --no-build-isolation``.
"""

import os
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.path.abspath(sourcedir)


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = os.path.abspath(os.path.dirname(self.get_ext_fullpath(ext.name)))
        build_temp = os.path.join(self.build_temp, ext.name)
        os.makedirs(build_temp, exist_ok=True)

        configure = [
            "cmake",
            "-S",
            ext.sourcedir,
            "-B",
            build_temp,
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DEBG_BUILD_TESTS=OFF",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", build_temp, "--target", "_ebgverify", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("ebgverify._ebgverify")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
