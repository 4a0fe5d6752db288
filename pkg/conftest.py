import pytest

import mfix


@pytest.fixture
def run_cli(capsys):
    """Run mfix with argv; returns (exit code, stdout)."""

    def run(*argv):
        code = mfix.main([str(a) for a in argv])
        return code, capsys.readouterr().out

    return run
