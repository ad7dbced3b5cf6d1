from setuptools import setup, find_packages

# Doing it as suggested here:
# https://packaging.python.org/guides/single-sourcing-package-version/
# (number 3)

version = {}
with open("hodunkl/version.py") as fp:
    exec(fp.read(), version)

with open("README.md") as f:
    readme = f.read()

extras = {
    "dev": ["bump2version"],
    "test": ["pytest", "pytest-cov"],
}

setup(
    name="hodunkl",
    version=version["__version__"],
    description=(
        "Exact-arithmetic engine for non-symmetric Heckman-Opdam "
        "polynomials, Dunkl kernels and their scaling limits."
    ),
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("test", "examples", "install")),
    zip_safe=False,
    install_requires=open("requirements.txt").read().splitlines(),
    extras_require=extras,
    entry_points={
        "console_scripts": ["hodunkl=hodunkl.interfaces.cli:main"],
    },
    python_requires=">=3.10.4",
)
