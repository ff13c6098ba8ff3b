from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "copmem._copmem",
    [
        "src/fasta_io.cpp",
        "src/sampling_index.cpp",
        "src/mem_finder.cpp",
        "src/oracle.cpp",
        "src/cli.cpp",
        "src/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
