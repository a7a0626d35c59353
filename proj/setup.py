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
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DGORKIT_BUILD_TESTS=OFF",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_gorkit", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("gorkit._gorkit")],
    cmdclass={"build_ext": CMakeBuild},
)
