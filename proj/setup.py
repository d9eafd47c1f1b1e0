import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DRSLIST_BUILD_TESTS=OFF",
                "-DRSLIST_BUILD_CLI=OFF",
            ],
            cwd=build_temp,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j"],
            cwd=build_temp,
            check=True,
        )

        staged = build_temp / "python" / "rslist"
        extdir.mkdir(parents=True, exist_ok=True)
        for lib in staged.glob("_core*"):
            self.copy_file(str(lib), str(extdir / lib.name))


setup(
    ext_modules=[CMakeExtension("rslist._core")],
    cmdclass={"build_ext": CMakeBuild},
)
