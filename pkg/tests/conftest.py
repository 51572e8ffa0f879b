from _report import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for criterion, ok, detail in RESULTS:
        terminalreporter.write_line(
            f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}"
        )
