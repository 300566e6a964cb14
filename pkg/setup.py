import os

from setuptools import Extension, setup


def extension_modules():
    # CODEPPL_SKIP_EXT=1 installs the pure-Python fallback only.
    if os.environ.get("CODEPPL_SKIP_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "codeppl._ngram_core",
                ["src/codeppl/_ngram_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extension_modules())
