from setuptools import setup
setup(
    name = "hypertheta",
    version = "1.0.0",
    entry_points = {
        'console_scripts': [
            'hypertheta=hypertheta.hypertheta:main',
        ],
    },
    packages = ['hypertheta'],
    package_data = { 'hypertheta': ['templates/*.j2'] },
    description = "Tool and library computing the theta invariant of module pairs over hypersurface rings.",
    long_description_content_type='text/markdown',
    long_description = """
The hypertheta utility computes the theta invariant for pairs of finitely
generated modules over a hypersurface ring R = k[x0..xn]/(f), with exact
arithmetic over the rationals or a prime field.

Example usage:

    hypertheta sing --vars x,y,z "x^2 + y*z"

Will print the Jacobian criterion, Milnor and Tjurina numbers of the singularity.

or:

    hypertheta experiment --family a_n_surface --nmin 1 --nmax 4

Will compute theta for all pairs of maximal Cohen-Macaulay modules of the A_n surface
singularities, as CSV.

For more details see the README.md file.
""",
    license = "MIT",
    keywords = "commutative-algebra groebner matrix-factorization singularity",
    classifiers = [
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires = '>=3.8',
    install_requires = ['sympy'],
    extras_require={ 'templates': ['Jinja2'], 'test': ['pytest'] },
)
