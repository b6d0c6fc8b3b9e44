"""Exact matrix algebra over cyclotomic fields, checked against a complex
floating-point oracle and sympy."""

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from b3image.cyclolinalg import CycMatrix, CycPolynomial
from b3image.errors import ConductorMismatch, DimensionMismatch, SingularMatrix, ZeroMatrix
from b3image.exactfield import CycNumber, RootOfUnity, embed, euler_phi


def to_complex(m: CycMatrix):
    zeta = cmath.exp(2j * cmath.pi / m.conductor)
    return [
        [sum(float(c) * zeta**j for j, c in enumerate(v.coords)) for v in row]
        for row in m.rows
    ]


def matclose(a, b) -> bool:
    return all(abs(x - y) < 1e-8 for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def cnum(n: int):
    phi = euler_phi(n)
    return st.builds(
        lambda coords: CycNumber.from_coords([Fraction(c, 2) for c in coords], n),
        st.lists(st.integers(-4, 4), min_size=phi, max_size=phi),
    )


def matrices(dims=(2, 3), conds=(1, 3, 4, 6, 8)):
    return st.sampled_from(conds).flatmap(
        lambda n: st.sampled_from(dims).flatmap(
            lambda d: st.builds(
                lambda entries: CycMatrix(
                    d, n, tuple(tuple(entries[i * d : (i + 1) * d]) for i in range(d))
                ),
                st.lists(cnum(n), min_size=d * d, max_size=d * d),
            )
        )
    )


# -- arithmetic ----------------------------------------------------------------------


@given(matrices())
@settings(max_examples=80)
def test_product_matches_complex_oracle(m):
    import numpy as np

    ours = to_complex(m * m)
    theirs = np.array(to_complex(m)) @ np.array(to_complex(m))
    assert matclose(ours, theirs.tolist())


@given(matrices())
@settings(max_examples=80)
def test_det_matches_complex_oracle(m):
    import numpy as np

    zeta = cmath.exp(2j * cmath.pi / m.conductor)
    det = sum(float(c) * zeta**j for j, c in enumerate(m.det().coords))
    assert abs(det - np.linalg.det(np.array(to_complex(m)))) < 1e-7


@given(matrices())
@settings(max_examples=60)
def test_inverse_or_singular(m):
    try:
        inv = m.inv()
    except SingularMatrix:
        assert m.det().is_zero()
        return
    assert m * inv == CycMatrix.identity(m.dim, m.conductor)
    assert inv * m == CycMatrix.identity(m.dim, m.conductor)


def test_dimension_and_conductor_guards():
    a = CycMatrix.identity(2, 4)
    with pytest.raises(DimensionMismatch):
        a * CycMatrix.identity(3, 4)
    with pytest.raises(ConductorMismatch):
        a * CycMatrix.identity(2, 6)
    with pytest.raises(DimensionMismatch):
        CycMatrix.from_rows([[1, 2], [3]], 1)


def test_pow_negative_inverts():
    m = CycMatrix.from_rows([[1, 1], [0, 1]], 1)
    assert m**-2 == CycMatrix.from_rows([[1, -2], [0, 1]], 1)
    assert m**0 == CycMatrix.identity(2, 1)


# -- characteristic polynomial ---------------------------------------------------------


def test_char_poly_against_sympy_rational():
    rows = [[1, 2, 0], [0, 3, 1], [5, 0, 1]]
    ours = CycMatrix.from_rows(rows, 1).char_poly()
    t = sympy.symbols("t")
    theirs = sympy.Poly((sympy.eye(3) * t - sympy.Matrix(rows)).det(), t).all_coeffs()
    assert [c.as_rational() for c in ours.coeffs] == list(reversed(theirs))


@given(matrices(dims=(2, 3)))
@settings(max_examples=60)
def test_char_poly_trace_det_relations(m):
    p = m.char_poly()
    assert p.is_monic() and p.degree == m.dim
    assert p.coeffs[m.dim - 1] == -m.trace()
    sign = 1 if m.dim % 2 == 0 else -1
    assert p.coeffs[0] == sign * m.det()


def test_char_poly_of_diagonal_from_roots():
    roots = [RootOfUnity.of(k, 7) for k in (0, 1, 3)]
    m = CycMatrix.diagonal(roots, 7)
    assert m.char_poly() == CycPolynomial.from_roots(roots, 7)


def test_polynomial_evaluation():
    p = CycPolynomial.from_roots([RootOfUnity.of(1, 4)], 4)
    i = embed(RootOfUnity.of(1, 4), 4)
    assert p(i).is_zero()
    assert not p(CycNumber.one(4)).is_zero()


# -- projective helpers -----------------------------------------------------------------


def test_projective_canonical_removes_scalar():
    m = CycMatrix.from_rows([[0, 2], [3, 1]], 12)
    z = embed(RootOfUnity.of(5, 12), 12) * Fraction(7, 3)
    assert (m.scale(z)).projective_canonical() == m.projective_canonical()
    assert m.projective_canonical().first_nonzero() == CycNumber.one(12)


def test_projective_canonical_zero_matrix():
    with pytest.raises(ZeroMatrix):
        CycMatrix.from_rows([[0, 0], [0, 0]], 1).projective_canonical()


def test_primitive_part_is_projectively_equal_and_integral():
    m = CycMatrix.from_rows(
        [[Fraction(2, 3), Fraction(4, 3)], [2, Fraction(8, 3)]], 1
    )
    p = m.primitive_part()
    assert p == CycMatrix.from_rows([[1, 2], [3, 4]], 1)
    assert p.projective_canonical() == m.projective_canonical()


def test_is_scalar():
    assert CycMatrix.identity(3, 6).scale(embed(RootOfUnity.of(1, 6), 6)).is_scalar()
    assert not CycMatrix.from_rows([[1, 1], [0, 1]], 1).is_scalar()


def test_projective_order_diagonal():
    m = CycMatrix.diagonal([RootOfUnity.of(0, 1), RootOfUnity.of(1, 6)], 6)
    assert m.projective_order(10) == 6
    assert m.projective_order(5) is None
    # scalar matrix has projective order 1
    s = CycMatrix.diagonal([RootOfUnity.of(1, 6)] * 2, 6)
    assert s.projective_order(3) == 1


def test_projective_order_respects_scaling():
    m = CycMatrix.from_rows([[0, 1], [1, 1]], 12)
    z = embed(RootOfUnity.of(1, 12), 12)
    assert m.projective_order(100) == m.scale(z).projective_order(100)


def test_matrix_hashable_with_exact_equality():
    a = CycMatrix.from_rows([[1, 0], [0, 1]], 1)
    b = CycMatrix.identity(2, 1)
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


def test_to_json_round_trippable_text():
    m = CycMatrix.from_rows([[1, Fraction(1, 2)], [0, 1]], 4)
    data = m.to_json()
    assert data["dim"] == 2 and data["conductor"] == 4
