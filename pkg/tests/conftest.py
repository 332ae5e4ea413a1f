import pytest

from chordlab.diagrams import enumerate_diagrams


@pytest.fixture(scope="session")
def diagram_classes():
    """Cached up-to-rotation representatives per order."""
    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = list(enumerate_diagrams(n, "up-to-rotation"))
        return cache[n]

    return get
