"""Builds the compiled extension by delegating to the project's CMake tree.

The extension target (_core) and the static core library are defined once in
CMakeLists.txt; this shim configures a scratch build directory, builds the
single target, and drops the resulting module where setuptools expects it.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )

        built = list(build_dir.glob("python/zsl/_core*.so"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        out = Path(self.get_ext_fullpath(ext.name))
        out.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], out)


setup(
    ext_modules=[CMakeExtension("zsl._core")],
    cmdclass={"build_ext": CMakeBuild},
)
