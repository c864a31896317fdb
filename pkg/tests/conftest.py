import pytest

from rootchi.corpus import bundled_corpus
from rootchi.skein import alexander, homfly_unreduced


@pytest.fixture(scope="session")
def corpus():
    """name -> (entry, diagram, unreduced homfly, alexander), computed once."""
    out = {}
    for entry in bundled_corpus():
        d = entry.diagram()
        p = homfly_unreduced(d)
        out[entry.name] = (entry, d, p, alexander(d, unreduced=p))
    return out
