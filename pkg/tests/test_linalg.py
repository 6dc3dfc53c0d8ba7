from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from scm_lab.linalg import GF2, RATIONALS, FieldSpec, rank


def fraction_rank(rows):
    """Textbook Gaussian elimination over Fraction, used as an oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 7).flatmap(
    lambda rows: st.integers(1, 7).flatmap(
        lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=rows, max_size=rows)
    )
)


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_rational_rank_matches_sympy_and_fractions(m):
    assert rank(m, RATIONALS) == sympy.Matrix(m).rank() == fraction_rank(m)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@given(m=matrices)
@settings(max_examples=80, deadline=None)
def test_modular_rank_matches_sympy_gf(p, m):
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    dm = DomainMatrix([[GF(p)(x) for x in row] for row in m], (len(m), len(m[0])), GF(p))
    assert rank(m, FieldSpec(p)) == dm.rank()


def test_characteristic_changes_rank():
    m = [[1, 1], [1, -1]]
    assert rank(m, RATIONALS) == 2
    assert rank(m, GF2) == 1


def test_empty_matrix():
    assert rank([], RATIONALS) == 0
    assert rank([[]], GF2) == 0


@pytest.mark.parametrize(
    "text,p",
    [("q", 0), ("Q", 0), ("0", 0), ("2", 2), ("p:3", 3), ("GF(5)", 5)],
)
def test_field_parse(text, p):
    assert FieldSpec.parse(text) == FieldSpec(p)


@pytest.mark.parametrize("bad", ["4", "p:9", "r", "p:x"])
def test_field_parse_rejects(bad):
    with pytest.raises(ValueError):
        FieldSpec.parse(bad)


def test_field_str():
    assert str(RATIONALS) == "QQ"
    assert str(FieldSpec(3)) == "GF(3)"
