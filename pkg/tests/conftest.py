import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--kernel-backend", choices=["compiled", "python"], default=None,
                     help="force the coefficient kernels used by buraukit")


def pytest_sessionstart(session):
    backend = session.config.getoption("--kernel-backend")
    if backend is not None:
        from buraukit import _core
        _core.use_backend(backend)
    # the inverse block is derived by hand; refuse to run on a wrong one
    from buraukit.burau import generator_image, mat_identity, mat_mul

    for n in range(2, 7):
        for i in range(1, n):
            pos, inv = generator_image(i, 1, n), generator_image(i, -1, n)
            assert mat_mul(pos, inv) == mat_identity(n)
            assert mat_mul(inv, pos) == mat_identity(n)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    _criteria[item.nodeid] = (mark.args[0], call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(_criteria.values(), key=lambda v: int(v[0].split()[0][2:])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
