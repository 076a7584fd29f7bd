import pytest

from translit import data
from translit.corpus import parse_corpus, train_model
from translit.ner import load_gazetteer


@pytest.fixture(scope="session")
def sample_entries():
    return parse_corpus(data.read_text(data.SAMPLE_CORPUS))


@pytest.fixture(scope="session")
def sample_model(sample_entries):
    model, _ = train_model(sample_entries)
    return model


@pytest.fixture(scope="session")
def sample_gazetteer():
    return load_gazetteer(data.path(data.PERSONS), data.path(data.LOCATIONS))


# -- acceptance summary ----------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n, title, budget): acceptance criterion n with a runtime budget"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    n, title = marker.args
    elapsed = dict(item.user_properties).get("elapsed")
    _criteria[n] = (title, report.passed, elapsed, marker.kwargs["budget"])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, passed, elapsed, budget = _criteria[n]
        timing = "" if elapsed is None else f"{elapsed:.3f}s"
        if budget != float("inf"):
            timing += f" (budget {budget:g}s)"
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if passed else 'FAIL'}  {title}  {timing}".rstrip()
        )
