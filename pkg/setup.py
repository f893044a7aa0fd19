from setuptools import setup, find_packages
from os.path import join

PROJECT = 'NegCat'

packages = [f'{PROJECT}']
packages_dir = {f'{PROJECT}': 'src'}

# Configure packages list and directories
for subpackage in find_packages(where='src'):
    packages.append(f'{PROJECT}.{subpackage}')
    packages_dir[f'{PROJECT}.{subpackage}'] = join('src', *subpackage.split('.'))

# Extract README.md content
with open('README.md') as f:
    long_description = f.read()

# Installation
setup(name=f'{PROJECT}',
      version='1.0.0',
      description='Proper abelian subcategories of D^b(kA_n) and of the negative cluster categories.',
      long_description=long_description,
      long_description_content_type='text/markdown',
      packages=packages,
      package_dir=packages_dir,
      python_requires='>=3.11',
      install_requires=['numpy >= 1.23.5',
                        'networkx >= 2.8',
                        'vedo >= 2022.4.1',
                        'matplotlib >= 3.6'],
      extras_require={'test': ['hypothesis >= 6.0']},
      entry_points={'console_scripts': ['negcat=NegCat.cli:execute_cli']})
