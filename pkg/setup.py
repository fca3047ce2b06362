import os
import shutil
import sys

from setuptools import find_packages
from setuptools import setup


def get_install_requires():
    install_requires = [
        "click",
        "mpmath",
        "numpy",
        "PyYAML",
        "sympy>=1.9",
        "termcolor",
    ]

    if os.name == "nt":  # Windows
        install_requires.append("colorama")

    return install_requires


def main():
    if len(sys.argv) > 1 and sys.argv[1] == "release":
        try:
            import github2pypi  # NOQA
        except ImportError:
            print(
                "Please install github2pypi\n\n\tpip install github2pypi\n",
                file=sys.stderr,
            )
            sys.exit(1)

        if shutil.which("twine") is None:
            print(
                "Please install twine:\n\n\tpip install twine\n",
                file=sys.stderr,
            )
            sys.exit(1)

    setup(
        name="arith_dyn",
        packages=find_packages(exclude=["tests", "tests.*"]),
        description="Exact arithmetic dynamics: heights, degrees and "
        "preperiodic points over small number fields",
        install_requires=get_install_requires(),
        package_data={"arith_dyn": ["config/*.yaml"]},
        entry_points={
            "console_scripts": [
                "arith_dyn=arith_dyn.cli.main:main"
            ],
        },
    )


if __name__ == "__main__":
    main()
