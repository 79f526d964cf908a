import hypothesis.strategies as st
import pytest
from hypothesis import settings

from exotic_springer.diagrams import CupDiagram, from_openers

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def cup_diagrams(draw, min_m: int = 1, max_m: int = 8) -> CupDiagram:
    m = draw(st.integers(min_m, max_m))
    openers = draw(st.sets(st.integers(1, m)))
    return from_openers(m, openers)


@st.composite
def diagram_pairs(draw, min_m: int = 1, max_m: int = 7) -> tuple[CupDiagram, CupDiagram]:
    m = draw(st.integers(min_m, max_m))
    a = from_openers(m, draw(st.sets(st.integers(1, m))))
    b = from_openers(m, draw(st.sets(st.integers(1, m))))
    return a, b


@pytest.fixture(params=["compiled", "python"])
def kernel_module(request):
    from exotic_springer import _kernels_py

    if request.param == "python":
        return _kernels_py
    try:
        from exotic_springer import _ckernels
    except ImportError:
        pytest.skip("compiled kernels not built")
    return _ckernels
