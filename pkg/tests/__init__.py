"""
__init__.py
~~~~~~~~~~~

This test suite checks the functions and identity suites of virasoro_paths.

Use the following command to run all the tests:
    python -m pytest tests

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""
