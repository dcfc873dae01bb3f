from importlib import resources
from pathlib import Path

import pytest

DATA = Path(str(resources.files("tscs") / "data"))
FIXTURES = Path(__file__).parent / "fixtures"

TEXT1 = (
    "When the defendant and his lawyer walked into the court, some of the "
    "victim supporters turned their backs to him."
)
TEXT2 = (
    "When the defendant walked into the courthouse with his attorney, the "
    "crowd turned their backs on him"
)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def mini_sts():
    return DATA / "mini_sts.tsv", DATA / "mini_sts.gold.txt"


# acceptance criteria report: tests call the `criterion` fixture, the summary
# hook prints one line per criterion after the run
_CRITERIA: dict[str, tuple[str, str]] = {}


class _Criterion:
    def __init__(self, key, desc):
        self.key, self.desc = key, desc
        _CRITERIA[key] = ("FAIL", desc)

    def passed(self, detail=""):
        _CRITERIA[self.key] = ("PASS", f"{self.desc}{' -- ' + detail if detail else ''}")


@pytest.fixture
def criterion():
    return _Criterion


def _natural(key):
    digits = "".join(ch for ch in key if ch.isdigit())
    return int(digits), key


def pytest_terminal_summary(terminalreporter):
    lines = dict(_CRITERIA)
    for rep in terminalreporter.stats.get("skipped", []):
        name = rep.nodeid.rsplit("::", 1)[-1]
        if "test_acceptance" in rep.nodeid and name.startswith("test_c"):
            key = name.split("_")[1].upper()
            lines.setdefault(key, ("SKIP", rep.longrepr[-1] if isinstance(rep.longrepr, tuple) else "skipped"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines, key=_natural):
        status, desc = lines[key]
        terminalreporter.write_line(f"[{status}] {key}: {desc}")
