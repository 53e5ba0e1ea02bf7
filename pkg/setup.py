from setuptools import setup, find_packages

with open('requirements.txt') as f:
    required = f.read().splitlines()

setup(
    name='ivcolor',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'examples*']),
    package_data={'ivcolor': ['config.json']},
    install_requires=required,
    entry_points={
        'console_scripts': [
            'ivcolor = ivcolor.main:run',
        ],
    },
)
