import os

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "exhaustive: opt-in long enumeration (set WEYLCOH_EXHAUSTIVE=1)",
    )


def pytest_collection_modifyitems(config, items):
    if os.environ.get("WEYLCOH_EXHAUSTIVE"):
        return
    skip = pytest.mark.skip(
        reason="opt-in: set WEYLCOH_EXHAUSTIVE=1 to run the full enumeration"
    )
    for item in items:
        if "exhaustive" in item.keywords:
            item.add_marker(skip)
