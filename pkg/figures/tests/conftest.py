from figreport import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.write_sep("-", "figure acceptance")
    for line in RESULTS:
        terminalreporter.write_line(line)
