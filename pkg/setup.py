from setuptools import setup

setup(
    name='mibelastic',
    version='0.0.1',
    author='Philip Diderichsen',
    author_email="cpd@hum.ku.dk",
    description="MIB solver for 3D two-phase linear elasticity interface"
                " problems",
    packages=['mibelastic', 'mibelastic.format'],
    py_modules=['mib_config'],
    install_requires=['numpy', 'scipy', 'xlwt'],
    extras_require={'tests': ['pytest']},
    entry_points={
        'console_scripts': ['mibelastic=mibelastic.cli:main'],
    },
)
