"""
Shared pytest setup: src/ and the project root on sys.path, the `slow` marker
"""

import os
import sys

ROOT = os.path.dirname(os.path.abspath(__file__))
for path in (ROOT, os.path.join(ROOT, 'src')):
    if path not in sys.path:
        sys.path.append(path)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized suite runs (deselect with -m 'not slow')")
