import numpy as np
from hypothesis import strategies as st

from quillenkit.linalg import IntMatrix


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, lo=-9, hi=9):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return IntMatrix(np.array(rows, dtype=np.int64).reshape(r, c))
