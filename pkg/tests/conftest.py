import subprocess
import sys

import numpy as np
import pytest


def run_cli(*args: str) -> subprocess.CompletedProcess:
    """Run the CLI in a subprocess, capturing real stdout/stderr bytes."""
    return subprocess.run(
        [sys.executable, "-m", "opgraph.cli", *args],
        capture_output=True,
        timeout=600,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_complex(rng, *shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
