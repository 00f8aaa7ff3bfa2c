import pytest

from gggrlab.grading import RelativeDiagram, WeightedDynkinDiagram
from gggrlab.ohmori import build_system
from gggrlab.rootsys import build_root_system, highest_root, neg
from gggrlab.scenarios import D1_WEIGHTS, E7_D0, MIZUNO_ROOTS, SINGLE_NODE, e8_u1_support
from gggrlab.torus import CyclicParams, kernel_subsystem, order_four_element


def e8_d1():
    rs = build_root_system("E8")
    k = kernel_subsystem(order_four_element(CyclicParams(13), 8, 6), rs)
    simples = tuple(r for r in rs.simple_roots if r[5] == 0) + (neg(highest_root(rs)),)
    return RelativeDiagram(k, simples, D1_WEIGHTS)


def e8_system(domain="subsystem"):
    d1 = e8_d1()
    zeros = d1.zero_positives() if domain == "subsystem" else d1.ambient_zero_positives()
    flat = WeightedDynkinDiagram(d1.sub.parent, (0,) * 8)
    return build_system(flat, e8_u1_support(), 1, zeros)


def e7_system():
    wdd = WeightedDynkinDiagram.of("E7", E7_D0)
    return build_system(wdd, list(MIZUNO_ROOTS.values()), 2, "levi")


def regular_system(name):
    rs = build_root_system(name)
    return build_system(WeightedDynkinDiagram(rs, (2,) * rs.rank), rs.simple_roots, 1, [])


def single_node_system(name):
    wdd = WeightedDynkinDiagram.of(name, SINGLE_NODE[name])
    return build_system(wdd, wdd.level(2), 1, "levi")


@pytest.fixture
def e8_sys():
    return e8_system()


@pytest.fixture
def e7_sys():
    return e7_system()
