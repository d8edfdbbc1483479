"""Build script: compiles the greedy-forwarding kernel when Cython is available.

The package is fully usable without the extension (a numpy fallback is
selected at import time), so the build degrades gracefully.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "switchsim.kernels._greedy_cy",
                ["src/switchsim/kernels/_greedy_cy.pyx"],
                # fp-contract off keeps the C kernel bit-identical with the
                # numpy fallback (no FMA contraction of a*b + c*d).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
