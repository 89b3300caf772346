import re

ACCEPTANCE_FILE = "test_acceptance.py"
CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            match = CRITERION.search(nodeid)
            if ACCEPTANCE_FILE not in nodeid or match is None:
                continue
            key = (int(match.group(1)), match.group(2).replace("_", " "))
            if status != "passed" or key not in outcomes:
                outcomes[key] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (number, label), outcome in sorted(outcomes.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {outcome}  {label}")
