import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import e7_system, e8_system
from gggrlab.ohmori import solve
from gggrlab.rootsys import add, build_root_system, classify_type, highest_root, is_simple_system, neg
from gggrlab.torus import (
    CyclicParams,
    TorusElement,
    TorusError,
    eval_root,
    kernel_subsystem,
    make_ohmori_torus,
    order,
    order_four_element,
)

PRESETS = [(5, 1), (5, 2), (13, 1), (13, 2)]
E8 = build_root_system("E8")
E7 = build_root_system("E7")


def test_params():
    p = CyclicParams(5, 2)
    assert (p.q, p.modulus, p.nu_exponent, p.half_nu_exponent) == (25, 24, 6, 3)
    assert CyclicParams.from_q(13, 169) == CyclicParams(13, 2)
    with pytest.raises(TorusError):
        CyclicParams(4)
    with pytest.raises(TorusError):
        CyclicParams(5, 1).half_nu_exponent
    with pytest.raises(TorusError):
        CyclicParams.from_q(5, 20)


def test_identity():
    t = TorusElement.identity(CyclicParams(13), 8)
    assert order(t) == 1
    assert all(eval_root(t, r) == 0 for r in E8.roots)
    assert len(kernel_subsystem(t, E8).members) == 240


@pytest.mark.parametrize("p,e", [(5, 1), (13, 1), (13, 2), (17, 1)])
def test_order_four_element(p, e):
    params = CyclicParams(p, e)
    s = order_four_element(params, 8, 6)
    assert order(s) == 4
    assert eval_root(s, E8.simple_roots[5]) == params.modulus // 4
    k = kernel_subsystem(s, E8)
    assert [str(x) for x in classify_type(k)] == ["D5", "A3"]
    pi1 = [r for r in E8.simple_roots if r[5] == 0] + [neg(highest_root(E8))]
    assert is_simple_system(k, pi1)


def test_order_four_needs_q_1_mod_4():
    with pytest.raises(TorusError):
        order_four_element(CyclicParams(7), 8, 6)


def test_all_ones_kernel_matches_brute_force():
    params = CyclicParams(13, 2)
    t = TorusElement(params, (1,) * 8)
    k = kernel_subsystem(t, E8)
    brute = {r for r in E8.roots if sum(r) % params.modulus == 0}
    assert k.members == brute == set()


def test_ohmori_torus_prime_field():
    t = make_ohmori_torus(CyclicParams(13), (1,) * 8)
    assert t.exponents == (1,) * 8


@pytest.mark.parametrize("p,e,expected", [(5, 2, 8), (13, 2, 24), (17, 2, 32), (5, 4, 8)])
def test_half_nu_torus_order(p, e, expected):
    t = make_ohmori_torus(CyclicParams(p, e), (1, 0, 0, 1, 0, 1, 0), half=True)
    assert order(t) == expected == 2 * (p - 1)


def test_half_requires_even_power():
    with pytest.raises(TorusError):
        make_ohmori_torus(CyclicParams(5, 1), (1, 0, 0, 1, 0, 1, 0), half=True)


@pytest.mark.parametrize("p,e", PRESETS)
def test_e8_torus_order(p, e):
    t = make_ohmori_torus(CyclicParams(p, e), (1, 1, 1, 0, 1, -5, 1, 1))
    assert order(t) == p - 1


def test_eval_rank_mismatch():
    with pytest.raises(TorusError):
        eval_root(TorusElement(CyclicParams(5), (1, 2)), (1, 0, 0))
    with pytest.raises(TorusError):
        kernel_subsystem(TorusElement(CyclicParams(5), (1, 2)), E8)


@pytest.mark.parametrize("p,e", PRESETS)
def test_support_roots_map_to_nu(p, e):
    params = CyclicParams(p, e)
    sys8 = e8_system()
    t = make_ohmori_torus(params, solve(sys8).point)
    for r, target in sys8.constraints:
        assert eval_root(t, r) == (target * params.nu_exponent) % params.modulus
    if e % 2 == 0:
        sys7 = e7_system()
        t7 = make_ohmori_torus(params, solve(sys7).point, half=True)
        for r, target in sys7.constraints:
            # target 2 with half exponents: alpha(t) = nu on support, 1 on the Levi
            assert eval_root(t7, r) == (target // 2 * params.nu_exponent) % params.modulus


@pytest.mark.parametrize("sys_fn", [e8_system, e7_system])
def test_kernel_contains_zero_domain(sys_fn):
    sys = sys_fn()
    n = solve(sys).point
    for p, e in PRESETS:
        k = kernel_subsystem(make_ohmori_torus(CyclicParams(p, e), n), sys.rs)
        zeros = [r for r, t in sys.constraints if t == 0]
        assert set(zeros) <= k.members


def _elements():
    return st.sampled_from([(5, 1), (7, 1), (3, 2), (13, 1), (5, 2)]).flatmap(
        lambda pe: st.tuples(
            st.just(CyclicParams(*pe)),
            st.lists(st.integers(0, pe[0] ** pe[1] - 2), min_size=8, max_size=8),
        )
    )


@settings(max_examples=80, deadline=None)
@given(_elements())
def test_kernel_closed_and_linear(data):
    params, ex = data
    t = TorusElement(params, tuple(ex))
    k = kernel_subsystem(t, E8)
    assert k.is_closed()
    m = params.modulus
    assert order(t) == m // math.gcd(m, *ex)
    # order by repeated addition
    j, cur = 1, t.exponents
    while any(cur):
        cur = tuple((a + b) % m for a, b in zip(cur, t.exponents))
        j += 1
    assert j == order(t)


@settings(max_examples=200, deadline=None)
@given(_elements(), st.data())
def test_eval_linear(data, d):
    params, ex = data
    t = TorusElement(params, tuple(ex))
    r = d.draw(st.sampled_from(E8.roots))
    s = d.draw(st.sampled_from(E8.roots))
    if E8.is_root(add(r, s)):
        assert eval_root(t, add(r, s)) == (eval_root(t, r) + eval_root(t, s)) % params.modulus


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(5, 2), (13, 2), (3, 2), (7, 2)]), st.lists(st.integers(-6, 6), min_size=7, max_size=7))
def test_order_divides(pe, n):
    params = CyclicParams(*pe)
    assert (params.p - 1) % order(make_ohmori_torus(params, n)) == 0
    assert (2 * (params.p - 1)) % order(make_ohmori_torus(params, n, half=True)) == 0
