import hypothesis.strategies as st
from hypothesis import settings

from alphaspline.alpha import CLASSICAL, Alpha

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

U4 = "0,0,0,1,2,3,3,3"
U0 = "0,1,2,3,4,5,6"


@st.composite
def finite_alphas(draw):
    neg = draw(st.booleans())
    if neg:
        return Alpha(draw(st.floats(-1e3, -1e-3)))
    return Alpha(draw(st.floats(1.0 + 1e-3, 1e3)))


def alphas_with_classical():
    return st.one_of(finite_alphas(), st.just(CLASSICAL))


@st.composite
def spans(draw):
    a = draw(st.floats(-100, 100))
    width = draw(st.floats(1e-2, 100))
    return a, a + width


@st.composite
def knot_lists(draw, min_size=4, max_size=12):
    """Non-decreasing node lists with possible repeats."""
    steps = draw(st.lists(st.sampled_from([0.0, 0.25, 0.5, 1.0, 1.5, 3.0]),
                          min_size=min_size - 1, max_size=max_size - 1))
    if sum(steps) == 0:
        steps[0] = 1.0
    start = draw(st.sampled_from([-2.0, 0.0, 1.0]))
    out = [start]
    for s in steps:
        out.append(out[-1] + s)
    return out
