from setuptools import setup, find_packages

setup(
    name = 'logmaj',
    version = '0.1',
    description = 'Numerical checks of log-majorization and matrix mean inequalities.',
    author = 'Medium',
    author_email = 'labs@thisismedium.com',
    license = 'BSD',
    keywords = 'matrix mean log-majorization singular values eigenvalues counterexample',

    packages = list(find_packages(exclude=('examples', 'examples.*'))),
    package_data = {
        'logmaj.linalg': ['*.json'],
        'logmaj.order': ['*.json'],
        'logmaj.randgen': ['*.json'],
        'logmaj.registry': ['*.json', '*.yaml'],
        'logmaj.search': ['*.json', 'fixtures/*.json'],
        'logmaj.cli': ['*.json'],
    },
    install_requires = ['numpy', 'avro>=1.11', 'ply', 'pyyaml'],
    entry_points = {
        'console_scripts': ['logmaj = logmaj.cli.main:main'],
    }
)
