import pytest

from subfield_codes.field import is_prime

ACCEPTANCE_LINES: list[str] = []


def prime_powers(limit, odd_only=False):
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p) or (odd_only and p == 2):
            continue
        m = 1
        while p**m <= limit:
            out.append((p, m))
            m += 1
    return sorted(out, key=lambda pm: pm[0] ** pm[1])


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
