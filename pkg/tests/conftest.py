import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cerscode import catalog  # noqa: E402
from cerscode.generate import random_corpus  # noqa: E402

CORPUS_SEED = 20240611


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(CORPUS_SEED, 60, max_faces=8, max_face_length=10)


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(CORPUS_SEED + 1, 40, max_faces=5, max_face_length=8)


@pytest.fixture(scope="session")
def fixed_catalog():
    return catalog.fixed_catalog()


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        name, ok, detail = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
