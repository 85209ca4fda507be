"""Run a fraclap experiment from a source checkout.

Equivalent to the ``fraclap`` console script, e.g.::

    python tools/run.py boundary-layer --table1 --out results
"""
import sys

from fraclap.apis import main

if __name__ == '__main__':
    sys.exit(main())
