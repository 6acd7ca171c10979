from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernels are optional: without them the package falls back to
# the NumPy implementations in kloosum._kernels_py at import time.
# -ffp-contract=off keeps the C arithmetic bit-identical to the fallback
# (no FMA contraction), which the exact-summation diagnostics rely on.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "kloosum._kernels",
                ["src/kloosum/_kernels.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
