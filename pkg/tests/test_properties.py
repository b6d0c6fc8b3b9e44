"""Property suites: the classification is Galois and scaling invariant over
the exhaustive small-order sweep, and dimension 3 is always decided."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from b3image.exactfield import RootOfUnity
from b3image.repforms import EigenSpec, galois_image, scale_spec
from b3image.verdict import classify
from invariance import (
    d3_undecidable_rows,
    invariance_failures,
    signature,
)


def test_galois_and_scaling_invariance_d3():
    assert invariance_failures(3) == []


def test_galois_and_scaling_invariance_d4():
    assert invariance_failures(4) == []


def test_d3_sweep_fully_decided():
    assert d3_undecidable_rows() == []


# -- sampled checks beyond the exhaustive order bound -------------------------------

exponent = st.integers(11, 40).flatmap(
    lambda n: st.integers(1, n - 1).map(lambda k: Fraction(k, n))
)


@settings(max_examples=40, deadline=None)
@given(st.sets(exponent, min_size=2, max_size=4), st.data())
def test_sampled_invariance_at_higher_orders(combo, data):
    spec = EigenSpec.from_exponents((Fraction(0),) + tuple(sorted(combo)))
    base = signature(classify(spec))
    n = spec.conductor()
    a = data.draw(
        st.integers(2, n - 1).filter(lambda a: Fraction(a, n).denominator == n),
        label="galois exponent",
    )
    assert signature(classify(galois_image(spec, a))) == base
    chi = RootOfUnity(data.draw(exponent, label="scale"))
    assert signature(classify(scale_spec(spec, chi))) == base
