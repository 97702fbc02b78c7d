from __future__ import annotations

from singlab import _engine


def pytest_report_header(config):
    kind = "compiled" if _engine.USING_COMPILED else "pure-python"
    return f"singlab enumeration kernels: {kind}"
