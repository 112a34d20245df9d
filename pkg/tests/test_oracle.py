from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from known import ex9, posets
from posetradius.codes import FieldVector, code_from_rows, p_weight
from posetradius.errors import TooLarge, ZeroVector
from posetradius.oracle import (
    OracleReport,
    ball_radius_oracle,
    code_radius_oracle,
    maxweight_oracle,
    partition_oracle,
    restricted_maxweight,
)
from posetradius.poset import antichain, chain


def test_chain_vector():
    v = FieldVector.parse("001")
    assert ball_radius_oracle(chain(3), v) == 2
    r, x = maxweight_oracle(chain(3), v)
    assert r == 2
    assert max(p_weight(chain(3), x), p_weight(chain(3), v - x)) == 3
    assert restricted_maxweight(chain(3), v) == 2


def test_antichain_vector():
    v = FieldVector.parse("11111")
    assert ball_radius_oracle(antichain(5), v) == 2


def test_zero_vector_rejected():
    with pytest.raises(ZeroVector):
        ball_radius_oracle(chain(2), FieldVector.parse("00"))


def test_space_limit():
    with pytest.raises(TooLarge):
        maxweight_oracle(antichain(21), FieldVector(2, (1,) * 21))


def test_partition_oracle():
    out = partition_oracle(ex9())
    assert (out.radius, out.discordancy) == (4, 3)
    assert out.strategy == "oracle"


def test_code_oracle():
    C = code_from_rows(2, [[1, 1, 0], [0, 1, 1]])
    assert code_radius_oracle(antichain(3), C) == 0
    assert code_radius_oracle(chain(3), C) == 1


def test_report_json():
    r = OracleReport("R(P)", 4, 4, "ex9")
    data = json.loads(json.dumps(r.to_json()))
    assert data == {"quantity": "R(P)", "oracle": 4, "engine": 4, "instance": "ex9", "agree": True}
    assert not OracleReport("R(P)", 4, 5, "x").agree


@settings(max_examples=80, deadline=None)
@given(posets(max_n=5), st.data())
def test_three_oracles_agree(P, data):
    coords = data.draw(st.lists(st.integers(0, 2), min_size=P.n, max_size=P.n).filter(any))
    v = FieldVector(3, tuple(coords))
    r = ball_radius_oracle(P, v)
    assert maxweight_oracle(P, v)[0] == r
    assert restricted_maxweight(P, v) == r
