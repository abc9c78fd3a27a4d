from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = ["bindings/py_module.cpp"] + sorted(
    path for path in glob("src/*.cpp") if not path.endswith("cli_main.cpp")
)

setup(
    ext_modules=[
        Pybind11Extension(
            "idemalg._idem",
            sources=sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
