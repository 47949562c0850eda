import pytest

from pairkit import registry

FINITE = [n for n in registry.listed() if registry.get(n).finite]
SMALL = [n for n in FINITE if len(registry.get(n).sample()) <= 9]


@pytest.fixture
def sb():
    return registry.get("supertropical-boolean")


@pytest.fixture
def db():
    return registry.get("doubled-boolean")


def el(p, *names):
    out = tuple(p.parse(x) for x in names)
    return out[0] if len(out) == 1 else out
