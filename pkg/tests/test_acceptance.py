"""The acceptance gate: one test per criterion, numbered, with the summary
lines printed by the conftest plugin."""

import time
from fractions import Fraction

from b3image.cyclolinalg import CycMatrix, CycNumber, CycPolynomial
from b3image.exactfield import MINUS_ONE, ONE, RootOfUnity, embed
from b3image.grouporacle import (
    COMPLETED,
    EXCEEDED,
    Word,
    check_relation,
    element_projective_order,
    projective_closure,
)
from b3image.qgallery import reproduce
from b3image.repforms import (
    build_d3,
    build_d4_block,
    build_so7,
    build_so9,
    validate_spec,
    EigenSpec,
)
from invariance import d3_undecidable_rows, invariance_failures

A = Word.gen(0)
B = Word.gen(1)

ROOTS_UP_TO_12 = [
    RootOfUnity(Fraction(k, n))
    for n in range(1, 13)
    for k in range(n)
    if Fraction(k, n).denominator == n
]


def test_criterion_1():
    """Spin-7 certificate: level-14 closure completes with exactly 168 elements."""
    start = time.monotonic()
    result = projective_closure(list(build_so7(14)), 100000)
    elapsed = time.monotonic() - start
    assert result.outcome == COMPLETED
    assert result.order == 168
    assert elapsed < 60


def test_criterion_2():
    """Spin-9 certificate: level-22 relations hold and the closure has 660 elements."""
    start = time.monotonic()
    gens = list(build_so9(22))
    s, t = A, A * B * A
    identity = Word(())
    assert check_relation(gens, s**11, identity)
    assert check_relation(gens, t**2, identity)
    assert check_relation(gens, (s**4 * t * s**6 * t) ** 2, identity)
    result = projective_closure(gens, 100000)
    elapsed = time.monotonic() - start
    assert result.outcome == COMPLETED
    assert result.order == 660
    assert elapsed < 600


def test_criterion_3():
    """Dimension 3, order-7 odd case: (AB^-1)^4 is scalar, closure divides 1176."""
    gens = list(build_d3(RootOfUnity.of(1, 7), RootOfUnity.of(3, 7)))
    word = (A * B.inverse()) ** 4
    assert word.evaluate(gens).is_scalar()
    result = projective_closure(gens, 10000)
    assert result.outcome == COMPLETED
    assert 1176 % result.order == 0


def test_criterion_4():
    """Dimension-4 blocks: order-6 closure divides 648, order-5 blocks close to 6.

    The fifth powers at order 5 split into the expected 2x2 blocks M and N;
    together with T those close to a 6-element projective group."""
    result = projective_closure(list(build_d4_block(RootOfUnity.of(1, 6), 1)), 10000)
    assert result.outcome == COMPLETED
    assert 648 % result.order == 0

    a, b = build_d4_block(RootOfUnity.of(1, 5), -1)
    n = a.conductor
    m = CycMatrix.from_rows([[1, -1], [0, -1]], n)
    nn = CycMatrix.from_rows([[-1, 0], [-1, 1]], n)
    t = CycMatrix.from_rows([[0, 1], [1, 0]], n)

    def doubled(x):
        zero = CycNumber.zero(n)
        rows = [[zero] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                rows[i][j] = x.rows[i][j]
                rows[i + 2][j + 2] = x.rows[i][j]
        return CycMatrix(4, n, tuple(tuple(r) for r in rows))

    assert a**5 == doubled(m)
    assert b**5 == doubled(nn)
    small = projective_closure([m, nn, t], 100)
    assert small.outcome == COMPLETED
    assert small.order == 6


def test_criterion_5():
    """Block characteristic polynomial identity, all orders up to 12."""
    checked = 0
    for u in ROOTS_UP_TO_12:
        if u.order in (1, 2, 4):
            continue
        for sign in (1, -1):
            a, b = build_d4_block(u, sign)
            prod = a * b.inv()
            arg = u if sign == -1 else -u
            conductor = prod.conductor
            zu = embed(arg, conductor)
            u2 = zu * zu
            u3 = u2 * zu
            u4 = u2 * u2
            one = CycNumber.one(conductor)
            coeffs = (
                u2,
                zu + u2 + u3,
                one + 2 * zu + 2 * u2 + 2 * u3 + u4,
                zu + u2 + u3,
                u2,
            )
            inv = u2.inv()
            oracle = CycPolynomial(conductor, tuple(c * inv for c in coeffs))
            assert prod.char_poly() == oracle
            checked += 1
    assert checked == 84


def test_criterion_6():
    """Braid relation holds exactly for every builder across the sweeps."""

    def braided(a, b):
        return a * b * a == b * a * b

    d3_checked = 0
    for theta in ROOTS_UP_TO_12:
        for phi in ROOTS_UP_TO_12:
            spec = EigenSpec(3, (ONE, theta, phi))
            if len({ONE, theta, phi}) < 3:
                continue
            if validate_spec(spec).status != "Valid":
                continue
            assert braided(*build_d3(theta, phi))
            d3_checked += 1
    assert d3_checked > 1000

    for u in ROOTS_UP_TO_12:
        if u.order in (1, 2, 4):
            continue
        for sign in (1, -1):
            assert braided(*build_d4_block(u, sign))

    for ell in range(14, 26, 2):
        assert braided(*build_so7(ell))
    for ell in range(18, 26, 2):
        assert braided(*build_so9(ell))


def test_criterion_7():
    """Reproduction table: every recorded claim row carries agreement=True."""
    rows = (
        [("G2", ell) for ell in (10, 14, 16, 18, 20, 22, 24, 26, 28, 30)]
        + [("F4", 22), ("F4", 24)]
        + [("SO7spin", 14), ("SO7spin", 18)]
        + [("SO9spin", 18), ("SO9spin", 20), ("SO9spin", 24)]
    )
    reports = [reproduce(family, ell) for family, ell in rows]
    by_row = {(r.family, r.ell): r for r in reports}

    # spot checks on the individually recorded outcomes
    so7_18 = by_row[("SO7spin", 18)]
    assert so7_18.verdict.kind == "Finite" and so7_18.verdict.rule == "2.1(c)(i)"
    so7_14 = by_row[("SO7spin", 14)]
    assert so7_14.verdict.kind == "Undecidable"
    assert so7_14.closure.order == 168
    so9_18 = by_row[("SO9spin", 18)]
    assert so9_18.verdict.rule == "2.1(a)" and not so9_18.spec.is_distinct()
    for ell in (20, 24):
        assert by_row[("SO9spin", ell)].closure.outcome == EXCEEDED
        assert by_row[("SO9spin", ell)].closure.bound == 100000
    for ell in (22, 24):
        assert by_row[("F4", ell)].verdict.kind == "Infinite"

    disagreements = [
        f"{r.family} ell={r.ell}: computed {r.verdict.kind} ({r.verdict.rule}), "
        f"recorded claim {r.expectation.kind}, quote {r.expectation.quote}"
        for r in reports
        if not r.agreement
    ]
    assert not disagreements, (
        "rows where the computed result contradicts the recorded claim "
        "(known case: the G2 level-24 claim rests on repeated eigenvalues, but "
        "the realized spectrum is distinct and lands in the dimension-4 "
        "undecided gap, so no agreement is possible):\n" + "\n".join(disagreements)
    )


def test_criterion_8():
    """Exhaustive Galois/scaling invariance at orders <= 10; dimension 3 decided.

    The invariance sweeps cover every dimension 3 and 4 spectrum with
    eigenvalue orders up to 10, and the dimension-3 sweep must contain no
    undecided verdict."""
    assert invariance_failures(3) == []
    assert invariance_failures(4) == []
    assert d3_undecidable_rows() == []


def test_criterion_9():
    """Infinite-order evidence: AB^-1 exceeds projective order 1000 at orders 7-11.

    The block builder with the negative sign and parameter order 7, 8, 9 or
    11 yields an element whose projective order passes the 1000 bound."""
    word = A * B.inverse()
    for n in (7, 8, 9, 11):
        gens = list(build_d4_block(RootOfUnity.of(1, n), -1))
        assert element_projective_order(gens, word, 1000) == EXCEEDED
