import os
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent.parent / "src" / "tracegate" / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def run_cli(*args, env=None):
    """Run the console entry point in a subprocess; returns CompletedProcess."""
    import subprocess

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "tracegate", *args],
        capture_output=True,
        text=True,
        env=full_env,
        timeout=600,
    )
