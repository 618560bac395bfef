import json

import pytest

import simpair

PA = '{"n":6,"E":[[0],[1,2],[3,4,5]],"F":[[0,1,2],[3,4,5]]}'


def pair_b():
    return simpair.Pair(6, [[0], [1], [2], [3, 4], [5]], [[0, 1, 2], [3, 4, 5]])


def pair_d():
    return simpair.Pair(6, [[0, 1], [2], [3, 4], [5]], [[0, 1, 2], [3, 4, 5]])


def pair_e():
    return simpair.Pair(5, [[0], [1], [2, 3], [4]], [[0, 1], [2, 3, 4]])


def test_round_trip_and_invariants():
    a = simpair.parse_pair(PA)
    assert simpair.serialize_pair(a) == PA
    assert a.n == 6
    assert a.E == [[0], [1, 2], [3, 4, 5]]
    assert simpair.crs(a) == "<2,1|0;0>"
    assert simpair.cs(a, "E") == "<3,2,1|0;0>"
    assert simpair.lcs(a, 0) == "<2,1|0;0>"
    assert simpair.gfs(a) == {"<0,0,1|0;0>": 1, "<1,1|0;0>": 1}


def test_validation_errors():
    with pytest.raises(simpair.Error, match="NotNested"):
        simpair.Pair(2, [[0, 1]], [[0], [1]])
    with pytest.raises(simpair.Error, match="ParseError"):
        simpair.parse_pair('{"n":')


def test_decisions_with_witnesses():
    a = simpair.parse_pair(PA)
    holds, witness = simpair.decide_reduction(a, pair_b())
    assert holds and witness == [0, 1, 1, 3, 3, 3]
    assert simpair.verify_witness(a, pair_b(), witness, "reduction") == (True, [])
    assert simpair.decide_embedding(pair_e(), pair_d())[0]
    assert simpair.decide_embedding(pair_d(), pair_e()) == (False, None)
    assert not simpair.gcs_leq(pair_d(), pair_e())
    holds, iso = simpair.decide_isomorphism(pair_d(), pair_d())
    assert holds and simpair.verify_witness(pair_d(), pair_d(), iso, "isomorphism")[0]


def test_decisions_agree_with_oracles_on_three_points():
    pairs = [p for n in range(4) for p in simpair.enumerate_pairs(n)]
    assert len(pairs) == 1 + 1 + 3 + 12
    for a in pairs:
        for b in pairs:
            assert simpair.decide_reduction(a, b)[0] == simpair.brute_reduction(a, b)[0]
            assert simpair.decide_embedding(a, b)[0] == simpair.brute_embedding(a, b)[0]
            assert simpair.decide_isomorphism(a, b)[0] == simpair.brute_isomorphism(a, b)[0]


def test_cap():
    big = simpair.random_pair(3, 8)
    with pytest.raises(simpair.CapExceeded):
        simpair.brute_reduction(big, big, cap=100)


def test_shapes():
    assert simpair.shape_leq("<2,1|0;0>", "<3,1|0;0>")
    assert not simpair.sc_member("<|1;0>")
    assert simpair.sc_member("<|inf;3>")
    assert simpair.min_size("<2,1|0;0>") == "3"
    assert simpair.canonical_shape("<2,0|0;0>") == "<2|0;0>"


def test_generators():
    p = simpair.build_shape_pair(["<2|0;0>", "<0,1|0;0>"])
    assert json.loads(simpair.serialize_pair(p)) == {"n": 4, "E": [[0], [1], [2, 3]], "F": [[0, 1], [2, 3]]}
    o = simpair.orbit_pair(4, ["(0 2)(1 3)"], ["(0 1 2 3)"])
    assert o.E == [[0, 2], [1, 3]] and o.F == [[0, 1, 2, 3]]
    assert simpair.random_pair(1, 6) == simpair.random_pair(1, 6)
    assert simpair.random_pair(1, 6, "shape").n == 6
