import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from findet.linalg import pivot_columns, rank, scalar_det
from findet.scalars import GF, QQ

from oracles import dense_rank

BACKENDS = ["flint", "python"]


def sparse(rows, field):
    return [{j: field.convert(v) for j, v in enumerate(r) if field.convert(v)} for r in rows]


def oracle_pivots(rows, p):
    # a column is a pivot iff it raises the rank of the column prefix
    out, prev = [], 0
    for j in range(len(rows[0])):
        r = dense_rank([row[: j + 1] for row in rows], p)
        if r > prev:
            out.append(j)
        prev = r
    return out


@pytest.mark.parametrize("backend", BACKENDS)
def test_small_examples(backend):
    F7 = GF(7)
    rows = [[1, 2, 3], [2, 4, 6], [0, 0, 1]]
    assert pivot_columns(sparse(rows, F7), 3, F7, backend) == [0, 2]
    assert rank(sparse(rows, QQ), 3, QQ, backend) == 2
    assert rank([], 5, QQ, backend) == 0
    assert rank(sparse([[7, 14]], F7), 2, F7, backend) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(1, 9), st.sampled_from([0, 2, 5, 101]), st.integers(0, 10**6))
def test_backends_match_oracle(nrows, ncols, p, seed):
    rng = random.Random(seed)
    field = GF(p) if p else QQ
    rows = [[rng.choice([0, 0, 1, -1, 2, rng.randint(-20, 20)]) for _ in range(ncols)] for _ in range(nrows)]
    if p == 0:
        rows[0][0] = Fraction(rng.randint(1, 5), rng.randint(1, 5))
    want = oracle_pivots(rows, p)
    for backend in BACKENDS:
        assert pivot_columns(sparse(rows, field), ncols, field, backend) == want


def test_unknown_backend():
    with pytest.raises(ValueError):
        pivot_columns([{0: 1}], 1, QQ, "numpy")


def test_scalar_det():
    assert scalar_det([[1, 2], [3, 4]], QQ) == -2
    assert scalar_det([[1, 2], [3, 4]], GF(5)) == 3
    assert scalar_det([[0, 1], [1, 0]], QQ) == -1
    assert scalar_det([[2, 4], [1, 2]], QQ) == 0
    with pytest.raises(ValueError):
        scalar_det([[1, 2]], QQ)
