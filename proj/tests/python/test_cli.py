import json
import os
import subprocess

import pytest

CLI = os.environ.get("QEULER_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="QEULER_CLI not set")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_exit_codes():
    assert run("euler", "1", "--q", "1").returncode == 0
    assert run("euler", "1", "--q", "1/0").returncode == 2
    assert run("euler", "1", "--q", "-1").returncode == 2
    assert run("verify", "nope").returncode == 2
    assert run("--max-terms", "10", "zeta", "--s=2", "--q", "0.99").returncode == 1


def test_json_and_seed_fallback():
    out = run("--format", "json", "euler", "1", "--q", "1/2")
    assert json.loads(out.stdout) == {"type": "rational", "num": "-1", "den": "3"}
    flag = run("verify", "eq9", "--seed", "5").stdout
    env = dict(os.environ, QEULER_SEED="5")
    assert run("verify", "eq9", env=env).stdout == flag
    assert run("verify", "eq9", "--seed", "6").stdout != flag
