from functools import lru_cache

import pytest

from freecurves.fixtures import ALL_FIXTURES
from freecurves.invariants import analyze
from freecurves.singularities import analyze_singularities


@lru_cache(maxsize=None)
def global_report(name):
    fx = next(f for f in ALL_FIXTURES if f.name == name)
    return analyze(fx.arrangement().product)


@lru_cache(maxsize=None)
def local_report(name):
    fx = next(f for f in ALL_FIXTURES if f.name == name)
    return analyze_singularities(fx.arrangement())


@pytest.fixture(params=ALL_FIXTURES, ids=lambda f: f.name)
def any_fixture(request):
    return request.param
