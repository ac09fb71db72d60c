import sys
import os
from setuptools import setup, find_packages
from posetkit import __version__

def main():
    # Read Description form file
    try:
        with open('README.md') as f:
            description = f.read()
    except:
        print('Cannot find README.md file.', file=sys.stderr)
        description = "Chain and antichain duality toolkit for posets."

    setup(
      name='posetkit',
      version=__version__,
      description='Chain and antichain duality toolkit for finite and lazily enumerated posets.',
      long_description=description,
      long_description_content_type='text/markdown',
      license='MIT License',
      packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
      zip_safe=False,
      python_requires='>=3.9',
      install_requires=[
          "cerberus-kind>=0.0.17,<1.0.0",
          "PyYAML>=5.4.1,<7.0.0",
          "InterruptHandler>=0.0.4,<1.0.0",
          "numpy>=1.21",
          "networkx>=3.0",
      ],
      extras_require={
          'test': ["pytest>=7.0"],
      },
      entry_points='''
        [console_scripts]
        posetkit=posetkit.__main__:main
        pk=posetkit.__main__:main
      '''
    )

if __name__ == '__main__':
    main()
