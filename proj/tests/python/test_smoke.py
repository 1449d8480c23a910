import os
from math import gcd

import pytest

import orbiloop as ol

DATA = os.environ.get(
    "ORBILOOP_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data")
)


def test_groups():
    g = ol.cyclic(4)
    assert g.order == 4 and g.is_abelian()
    s3 = ol.parse_group("table:" + os.path.join(DATA, "s3_table.json"))
    assert [len(c) for c in s3.conjugacy_classes()] == [1, 3, 2]
    with pytest.raises(ol.InputError):
        ol.cyclic(0)


def test_h2_matches_gcd():
    for n in range(1, 5):
        for m in range(1, 5):
            a = ol.FiniteAbelianGroup([m])
            assert ol.h2_order(ol.cyclic(n), a) == gcd(n, m)
            assert ol.h2_order(ol.cyclic(n), a, "brute") == gcd(n, m)


def test_cohomologous():
    g, a = ol.cyclic(3), ol.FiniteAbelianGroup([2])
    carry = ol.carrying_cocycle(g, a, 1)
    assert ol.is_cocycle(carry)
    assert ol.cohomologous(carry, ol.Cochain2.zero(g, a), "brute") == [0, 1, 0]
    g2 = ol.cyclic(2)
    assert ol.cohomologous(ol.carrying_cocycle(g2, a, 1), ol.Cochain2.zero(g2, a)) is None


def test_twisted_product_and_verdict():
    h = ol.cpl_minimal_model(1, 2)
    assert h.multiply("1+eps", "1+eps") == "[CP^1]"
    g, a = ol.cyclic(2), ol.FiniteAbelianGroup([2])
    ta = ol.TwistedAlgebra.make(h, g, a, ["1+eps"], ol.carrying_cocycle(g, a, 1))
    assert ta.product(0, 1, 0, 1) == "[CP^1]⊗0 + eps⊗0"
    v = ta.verdict()
    assert v["splits"] is False and v["obstruction_order"] == 2
    assert ta.tqft()["passed"]


def test_config_and_cli():
    ta = ol.load_config(os.path.join(DATA, "verdict_circle_c3.json"))
    assert ta.verdict()["summary"] == "splits: true, witness: ξ ≡ 0"
    code, out, _ = ol.run_cli(["h2", "--group", "cyclic:4", "--coeff", "2"])
    assert (code, out) == (0, "2\n")
    code, out, _ = ol.run_cli(
        ["cohomologous", os.path.join(DATA, "carrying_c2_z2.json"), os.path.join(DATA, "zero.json")]
    )
    assert (code, out) == (1, "not cohomologous\n")
    code, _, err = ol.run_cli(["verdict", os.path.join(DATA, "bad_generator.json")])
    assert code == 2 and "config.generator_images" in err
