import os

import hypothesis
import pytest

hypothesis.settings.register_profile("default", deadline=None, max_examples=40)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=8)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=400)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_VERDICTS = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """record(number, title, ok, detail) prints and stores one verdict line."""
    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        print(line)
        request.config.stash.setdefault(_VERDICTS, {})[number] = line
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    verdicts = config.stash.get(_VERDICTS, None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for number in sorted(verdicts):
            terminalreporter.write_line(verdicts[number])
