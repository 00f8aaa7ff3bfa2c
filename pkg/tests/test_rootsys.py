import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gggrlab.rootsys import (
    RootSystemError,
    SimpleType,
    Subsystem,
    add,
    build_root_system,
    cartan_matrix,
    classify_cartan,
    classify_type,
    coweight_pairing,
    extract_simple_system,
    full_subsystem,
    highest_root,
    is_simple_system,
    neg,
    relative_cartan,
    supported_types,
    unit,
)
from gggrlab.torus import CyclicParams, kernel_subsystem, order_four_element

from oracles import reflection_closure

ALL_TYPES = supported_types(8)

# |Phi^+| for each family, frozen from the reflection-closure oracle
POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "B2": 4, "G2": 6, "A3": 6, "B3": 9, "C3": 9, "D4": 12,
    "F4": 24, "E6": 36, "E7": 63, "E8": 120, "A8": 36, "B8": 64, "D8": 56,
}


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_generation_matches_reflection_closure(t):
    rs = build_root_system(t)
    assert set(rs.roots) == reflection_closure(rs.cartan)
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)
    assert sum(1 for r in rs.positive_roots if sum(r) == 1) == rs.rank


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(build_root_system(name).positive_roots) == count


def test_a1():
    assert build_root_system("A1").positive_roots == ((1,),)


def test_g2_heights():
    rs = build_root_system("G2")
    assert sorted(sum(r) for r in rs.positive_roots) == [1, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_ordering_and_string_property(t):
    rs = build_root_system(t)
    keys = [(sum(r), r) for r in rs.positive_roots]
    assert keys == sorted(keys)
    for r in rs.positive_roots:
        assert all(c >= 0 for c in r)
        if sum(r) > 1:
            assert any(rs.is_root(tuple(c - (k == i) for k, c in enumerate(r))) for i in range(rs.rank))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_cartan_recovered_from_pairings(t):
    rs = build_root_system(t)
    rebuilt = tuple(tuple(rs.coroot_pairing(a, j) for j in range(rs.rank)) for a in rs.simple_roots)
    assert rebuilt == rs.cartan
    assert relative_cartan(rs, rs.simple_roots) == rs.cartan


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_cartan_invariants(t):
    c = cartan_matrix(t)
    for i in range(len(c)):
        assert c[i][i] == 2
        for j in range(len(c)):
            if i != j:
                assert c[i][j] in (0, -1, -2, -3)
                assert (c[i][j] == 0) == (c[j][i] == 0)


@pytest.mark.parametrize("bad", ["E5", "E9", "F3", "G3", "B1", "C1", "D1", "H3", "A0"])
def test_invalid_types_rejected(bad):
    with pytest.raises(RootSystemError):
        SimpleType.parse(bad)


def test_highest_roots():
    assert highest_root(build_root_system("E8")) == (2, 3, 4, 6, 5, 4, 3, 2)
    assert highest_root(build_root_system("A2")) == (1, 1)
    g2 = highest_root(build_root_system("G2"))
    assert sum(g2) == 5 == max(sum(r) for r in build_root_system("G2").positive_roots)


@pytest.mark.parametrize("t", [t for t in ALL_TYPES if str(t) != "D2"], ids=str)
def test_highest_root_is_maximal(t):
    rs = build_root_system(t)
    top = highest_root(rs)
    assert all(not rs.is_root(add(top, a)) for a in rs.simple_roots)
    assert all(all(x >= y for x, y in zip(top, r)) for r in rs.positive_roots)


def test_highest_root_rejects_reducible():
    with pytest.raises(RootSystemError):
        highest_root(build_root_system("D2"))


def test_coweight_pairing_examples():
    e8 = build_root_system("E8")
    for i in range(1, 9):
        for j in range(1, 9):
            assert coweight_pairing(unit(8, i - 1), j) == int(i == j)
    assert coweight_pairing(neg(highest_root(e8)), 6) == -4
    assert coweight_pairing(add(unit(8, 2), unit(8, 3)), 4) == 1
    with pytest.raises(RootSystemError):
        coweight_pairing(unit(8, 0), 9)


def _root_pairs():
    names = [str(t) for t in ALL_TYPES]
    return st.sampled_from(names).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sampled_from(build_root_system(n).roots),
            st.sampled_from(build_root_system(n).roots),
        )
    )


@settings(max_examples=300, deadline=None)
@given(_root_pairs())
def test_pairing_linearity(data):
    name, r, s = data
    rs = build_root_system(name)
    for j in range(1, rs.rank + 1):
        assert coweight_pairing(neg(r), j) == -coweight_pairing(r, j)
        if rs.is_root(add(r, s)):
            assert coweight_pairing(add(r, s), j) == coweight_pairing(r, j) + coweight_pairing(s, j)
    for i in range(rs.rank):
        assert rs.coroot_pairing(add(r, s), i) == rs.coroot_pairing(r, i) + rs.coroot_pairing(s, i)


def _e8_kernel():
    rs = build_root_system("E8")
    s = order_four_element(CyclicParams(13), 8, 6)
    return rs, kernel_subsystem(s, rs)


def test_simple_system_examples():
    rs, k = _e8_kernel()
    pi1 = [r for r in rs.simple_roots if r[5] == 0] + [neg(highest_root(rs))]
    assert is_simple_system(k, pi1)
    full = full_subsystem(rs)
    assert is_simple_system(full, rs.simple_roots)
    assert not is_simple_system(full, rs.simple_roots[1:])


def test_simple_system_candidate_outside_rejected():
    rs, k = _e8_kernel()
    with pytest.raises(RootSystemError):
        is_simple_system(k, [unit(8, 5)])


def test_classify_examples():
    _, k = _e8_kernel()
    assert [str(t) for t in classify_type(k)] == ["D5", "A3"]
    assert [str(t) for t in classify_type(full_subsystem(build_root_system("E7")))] == ["E7"]


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_classify_full_system(t):
    got = classify_type(full_subsystem(build_root_system(t)))
    canonical = {"C2": "B2", "D3": "A3", "D2": "A1"}
    if str(t) == "D2":
        assert [str(x) for x in got] == ["A1", "A1"]
    else:
        assert [str(x) for x in got] == [canonical.get(str(t), str(t))]


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_classify_invariant_under_renumbering(rnd):
    rs, k = _e8_kernel()
    simples = list(extract_simple_system(k))
    order = list(range(len(simples)))
    rnd.shuffle(order)
    shuffled = [simples[i] for i in order]
    assert classify_cartan(relative_cartan(rs, shuffled)) == classify_type(k)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["E6", "E7", "E8", "F4", "D6", "B5"]), st.lists(st.integers(0, 6), min_size=8, max_size=8))
def test_levi_subsystems_closed_and_classified(name, mask):
    rs = build_root_system(name)
    keep = [i for i in range(rs.rank) if mask[i] % 2]
    members = frozenset(r for r in rs.roots if all(r[i] == 0 for i in range(rs.rank) if i not in keep))
    sub = Subsystem(rs, members)
    assert sub.is_closed()
    types = classify_type(sub)
    assert sum(t.rank for t in types) == len(keep)
    assert sum(len(build_root_system(t).positive_roots) for t in types) == len(sub.positive)


def test_json_dump_is_canonical():
    doc = json.loads(build_root_system("E8").to_json())
    assert doc["type"] == "E8" and doc["rank"] == 8
    assert len(doc["positive_roots"]) == 120
    assert doc["positive_roots"][-1] == [2, 3, 4, 6, 5, 4, 3, 2]
    assert build_root_system("E8").to_json() == build_root_system("E8").to_json()


def test_random_pairs_linearity_bulk():
    rnd = random.Random(0)
    rs = build_root_system("E8")
    roots = rs.roots
    checked = 0
    for _ in range(10_000):
        r, s = rnd.choice(roots), rnd.choice(roots)
        t = add(r, s)
        if rs.is_root(t):
            checked += 1
            for j in range(1, 9):
                assert coweight_pairing(t, j) == coweight_pairing(r, j) + coweight_pairing(s, j)
    assert checked > 0
