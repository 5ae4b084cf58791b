"""Setup file for fockcalc package."""

from setuptools import setup

setup(
    name="fockcalc",
    version="0.1.0",
    description="Exact computer algebra for Schubert derivations, the boson-fermion correspondence and DJKM vertex operators",
    author="Your Name",
    packages=["fockcalc", "fockcalc.algebra"],
    package_dir={"fockcalc": "."},
    python_requires=">=3.8",
    install_requires=[
        "python-dotenv",
        "numpy",
        "sympy",
    ],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": [
            "fockcalc=fockcalc.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
