import functools

import pytest

from pck.workbench.corpus import CORPUS_NAMES, REFUSAL_CASES, corpus_member


@functools.lru_cache(maxsize=None)
def member(name):
    return corpus_member(name)


@pytest.fixture(scope="session")
def corpus():
    return {name: member(name) for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def symmetric_corpus(corpus):
    return {n: A for n, A in corpus.items() if n not in REFUSAL_CASES}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
