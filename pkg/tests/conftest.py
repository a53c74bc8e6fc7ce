import os
import subprocess
import sys
from pathlib import Path

import pytest

from linca.rule import parse_rule

RULE90_TEXT = "1@(-1);1@(1)"

FIXTURE_RULES_1D = (
    "1@(-1);1@(1)",
    "1@(-1);1@(0);1@(1)",
    "2@(-1);1@(1)",
    "1@(-2);1@(2)",
    "1@(-1);2@(0);3@(1)",
)

FIXTURE_RULE_2D = "1@(-1,0);1@(1,0);1@(0,-1);1@(0,1)"

SRC_DIR = Path(__file__).resolve().parents[1] / "src"


@pytest.fixture
def rule90():
    return parse_rule(RULE90_TEXT)


@pytest.fixture
def rules_1d():
    return [parse_rule(text) for text in FIXTURE_RULES_1D]


@pytest.fixture
def rule_2d():
    return parse_rule(FIXTURE_RULE_2D, dimension=2)


def run_cli(*argv: str, cwd=None) -> subprocess.CompletedProcess:
    """Run the CLI in a fresh interpreter and capture output bytes."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC_DIR) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "linca", *argv],
        capture_output=True,
        env=env,
        cwd=cwd,
    )
