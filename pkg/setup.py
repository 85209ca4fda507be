import os
import re
import subprocess
import time
from setuptools import find_packages, setup

version_file = 'fraclap/version.py'


def readme():
    with open('README.md', encoding='utf-8') as f:
        content = f.read()
    return content


def get_git_hash():
    # minimal, locale-independent environment for git
    env = {k: os.environ[k] for k in ('SYSTEMROOT', 'PATH', 'HOME')
           if k in os.environ}
    env.update(LANGUAGE='C', LANG='C', LC_ALL='C')
    try:
        out = subprocess.run(['git', 'rev-parse', 'HEAD'],
                             stdout=subprocess.PIPE,
                             env=env).stdout
        sha = out.strip().decode('ascii')
    except OSError:
        sha = 'unknown'
    return sha


def get_hash():
    if os.path.exists('.git'):
        sha = get_git_hash()[:7]
    elif os.path.exists(version_file):
        try:
            from fraclap.version import __version__
            sha = __version__.split('+')[-1]
        except ImportError:
            raise ImportError('Unable to get git version')
    else:
        sha = 'unknown'

    return sha


def write_version_py():
    content = """# GENERATED VERSION FILE
# TIME: {}
__version__ = '{}'
short_version = '{}'
version_info = ({})
"""
    sha = get_hash()
    with open('fraclap/VERSION', 'r') as f:
        SHORT_VERSION = f.read().strip()
    VERSION_INFO = ', '.join(
        [x if x.isdigit() else f'"{x}"' for x in SHORT_VERSION.split('.')])
    VERSION = SHORT_VERSION + '+' + sha

    version_file_str = content.format(time.asctime(), VERSION, SHORT_VERSION,
                                      VERSION_INFO)
    with open(version_file, 'w') as f:
        f.write(version_file_str)


def get_version():
    with open(version_file, 'r') as f:
        exec(compile(f.read(), version_file, 'exec'))
    import sys
    # return short version for sdist
    if 'sdist' in sys.argv or 'bdist_wheel' in sys.argv:
        return locals()['short_version']
    else:
        return locals()['__version__']


def parse_requirements(fname='requirements.txt', with_version=True):
    """Read the package dependencies listed in a requirements file.

    Lines of the form ``-r other.txt`` are followed recursively and comments
    are skipped.

    Args:
        fname (str): Path to the requirements file.
        with_version (bool): Keep version specifiers such as ``>=1.1.1,<2``.
            Default: True.

    Returns:
        list[str]: Requirement strings for ``install_requires``.
    """
    if not os.path.exists(fname):
        return []

    requirements = []
    with open(fname, 'r') as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('-r '):
                target = os.path.join(
                    os.path.dirname(fname), line.split(' ', 1)[1].strip())
                requirements.extend(parse_requirements(target, with_version))
                continue
            if not with_version:
                line = re.split('[<>=!~ ]', line, maxsplit=1)[0]
            requirements.append(line.replace(' ', ''))
    return requirements


if __name__ == '__main__':
    write_version_py()
    setup(
        name='fraclap',
        version=get_version(),
        description='Fractional Laplacian solutions on intervals and squares: '
        'Riesz closed forms, spectral series and boundary-layer analysis',
        long_description=readme(),
        long_description_content_type='text/markdown',
        maintainer='fraclap Authors',
        packages=find_packages(exclude=('configs', 'tools', 'tests')),
        classifiers=[
            'Development Status :: 4 - Beta',
            'License :: OSI Approved :: Apache Software License',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.6',
            'Programming Language :: Python :: 3.7',
            'Programming Language :: Python :: 3.8',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
        license='Apache License 2.0',
        setup_requires=parse_requirements('requirements/build.txt'),
        tests_require=parse_requirements('requirements/tests.txt'),
        install_requires=parse_requirements('requirements/runtime.txt'),
        extras_require={
            'all': parse_requirements('requirements.txt'),
            'tests': parse_requirements('requirements/tests.txt'),
            'build': parse_requirements('requirements/build.txt'),
            'optional': parse_requirements('requirements/optional.txt'),
        },
        entry_points={
            'console_scripts': ['fraclap=fraclap.apis.cli:main'],
        },
        zip_safe=False)
