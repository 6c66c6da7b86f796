import io
from contextlib import redirect_stderr, redirect_stdout

import pytest
from hypothesis import HealthCheck, settings

from rockers.cli import main

settings.register_profile(
    "numerical",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numerical")


@pytest.fixture
def run_cli():
    """In-process CLI runner: returns (exit_code, stdout, stderr)."""

    def _run(argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
        return code, out.getvalue(), err.getvalue()

    return _run
