import setuptools

setuptools.setup(
    name='polyprod',
    version='1.0.0',
    description='Construct and recognize polyhedral Kronecker and Cartesian '
                'graph products',
    long_description=open('README.rst').read(),
    install_requires=['networkx>=2.5'],
    extras_require={'testing': ['coverage', 'flake8', 'mock', 'nose']},
    license='BSD',
    package_data={'': ['README.rst']},
    packages=['polyprod'],
    entry_points={'console_scripts': ['polyprod = polyprod.cli:main']},
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics'],
    zip_safe=True)
