import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rankarg.catalog import chain, example1, figure2, two_cycle  # noqa: E402


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def fig2():
    return figure2()


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def cycle2():
    return two_cycle()
