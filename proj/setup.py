"""Builds the `_vlo` pybind11 extension through the project's CMake setup."""

import os
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
        build_dir = source_dir / "build" / "python-ext"
        build_dir.mkdir(parents=True, exist_ok=True)

        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)

        import pybind11

        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={os.environ.get('VLO_BUILD_TYPE', 'Release')}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            # pin to the pip-installed pybind11; an older system-wide copy may
            # not match the installed numpy ABI
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            "-DVLO_BUILD_PYTHON=ON",
        ]
        if shutil.which("ninja"):
            cmake_args += ["-G", "Ninja"]

        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_vlo"], cwd=build_dir, check=True)

        built = next(build_dir.glob("_vlo*.so"))
        shutil.copy2(built, ext_path)


setup(
    ext_modules=[CMakeExtension("vlo._vlo")],
    cmdclass={"build_ext": CMakeBuild},
)
