"""Polynomial arithmetic, parsing, formatting, and monomial orders."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerstable import (
    AlgebraError,
    BlockElim,
    CoefficientError,
    Grevlex,
    Lex,
    NonExactDivisionError,
    ParseError,
    Polynomial,
    RingMismatchError,
    RingSpec,
    ZeroPolynomialError,
    evaluate_map,
    exact_divide,
    format_poly,
    parse_order,
    parse_poly,
    transport,
)
from powerstable.orders import key_function
from powerstable.polynomials import Exponents

from oracles import eval_poly, grid_equal, naive_product, term_map

ZX = RingSpec.parse("ZZ[X]")
QYX = RingSpec.parse("QQ[Y][X]")
QYZW = RingSpec.parse("QQ[Y,Z,W]")
F5 = RingSpec.parse("Fp(5)[Y,Z][X]")

RINGS = pytest.mark.parametrize("ring", [ZX, QYX, F5], ids=["ZZ[X]", "QQ[Y][X]", "F5[Y,Z][X]"])


def build(ring, triples):
    """Assemble a polynomial from (exponents, int coefficient) pairs."""
    out = Polynomial.zero(ring)
    for e, c in triples:
        t = Polynomial.constant(ring, c)
        for v, k in zip(ring.variables, e):
            if k:
                t = t * Polynomial.variable(ring, v) ** k
        out = out + t
    return out


@st.composite
def polys(draw, ring, max_terms=5, max_exp=3):
    n = len(ring.variables)
    exp = st.tuples(*(st.integers(0, max_exp) for _ in range(n)))
    triples = draw(st.lists(st.tuples(exp, st.integers(-9, 9)), max_size=max_terms))
    return build(ring, triples)


# -- arithmetic laws -----------------------------------------------------------


@RINGS
def test_polynomial_ring_laws(ring):
    @settings(max_examples=60, deadline=None)
    @given(f=polys(ring), g=polys(ring), h=polys(ring))
    def laws(f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + Polynomial.zero(ring) == f
        assert f * Polynomial.one(ring) == f
        assert (f - g) + g == f
        assert f + (-f) == Polynomial.zero(ring)

    laws()


@RINGS
def test_product_matches_naive_convolution(ring):
    @settings(max_examples=60, deadline=None)
    @given(f=polys(ring), g=polys(ring))
    def check(f, g):
        assert term_map(f * g) == naive_product(f, g)

    check()


def test_power_matches_repeated_multiplication():
    f = parse_poly("X^2 - Y + 1", QYX)
    acc = Polynomial.one(QYX)
    for k in range(7):
        assert f**k == acc
        acc = acc * f
    with pytest.raises(AlgebraError):
        f ** (-1)


def test_syzygy_identity_three_ways():
    # (W^3 - YZ)^2 - (Y^2 - WZ)(Z^2 - W^2 Y) factors through W
    f1 = parse_poly("W^3 - Y*Z", QYZW)
    f2 = parse_poly("Y^2 - W*Z", QYZW)
    f3 = parse_poly("Z^2 - W^2*Y", QYZW)
    q = parse_poly("W^5 + Y^3*W - 3*Y*Z*W^2 + Z^3", QYZW)
    w = Polynomial.variable(QYZW, "W")
    lhs = f1 * f1 - f2 * f3
    assert lhs == w * q
    assert term_map(lhs) == naive_product(w, q)
    assert grid_equal(lhs, w * q)


def test_evaluation_respects_arithmetic():
    rng = random.Random("eval:0")
    for _ in range(50):
        f = build(QYZW, [(tuple(rng.randint(0, 3) for _ in range(3)), rng.randint(-5, 5))])
        g = build(QYZW, [(tuple(rng.randint(0, 3) for _ in range(3)), rng.randint(-5, 5))])
        pt = tuple(rng.randint(-4, 4) for _ in range(3))
        assert eval_poly(f + g, pt) == eval_poly(f, pt) + eval_poly(g, pt)
        assert eval_poly(f * g, pt) == eval_poly(f, pt) * eval_poly(g, pt)


def test_ring_mismatch_refused():
    f = parse_poly("X", ZX)
    g = parse_poly("X", QYX)
    with pytest.raises(RingMismatchError):
        f + g
    with pytest.raises(RingMismatchError):
        f * g
    with pytest.raises(RingMismatchError):
        f + 1  # plain scalars never silently coerce


# -- inspection ------------------------------------------------------------------


def test_degrees_and_structure():
    f = parse_poly("2*Y^2*X^3 - X + 5", QYX)
    assert f.total_degree() == 5
    assert f.degree_in("X") == 3
    assert f.degree_in("Y") == 2
    assert Polynomial.zero(QYX).total_degree() == -1
    assert f.term_count() == 3
    assert not f.is_constant()
    assert parse_poly("7", QYX).is_constant()
    assert f.constant_value() == 5
    assert f.uses_var("X") and f.uses_var("Y")
    assert parse_poly("X", QYX).free_of(["Y"])
    assert not f.free_of(["Y"])


def test_coefficient_of_reassembles():
    f = parse_poly("2*Y^2*X^3 - Y*X + X - 3", QYX)
    x = Polynomial.variable(QYX, "X")
    total = Polynomial.zero(QYX)
    for d in range(f.degree_in("X") + 1):
        total = total + f.coefficient_of("X", d) * x**d
    assert total == f
    assert f.coefficient_of("X", 3) == parse_poly("2*Y^2", QYX)
    assert f.coefficient_of("X", 1) == parse_poly("1 - Y", QYX)


def test_leading_term():
    f = parse_poly("Y^2*Z - W^3", QYZW)
    e, c = f.leading_term()
    assert e == (2, 1, 0) and c == 1
    e, c = f.leading_term(Lex(("W", "Y", "Z")))
    assert e == (0, 0, 3) and c == -1
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero(QYZW).leading_term()


# -- canonical representation ------------------------------------------------------


def test_canonical_under_shuffled_assembly():
    rng = random.Random("shuffle:1")
    triples = [((i % 4, (i * 7) % 3, i % 2), rng.randint(-9, 9)) for i in range(12)]
    reference = build(QYZW, triples)
    for _ in range(10):
        shuffled = triples[:]
        rng.shuffle(shuffled)
        again = build(QYZW, shuffled)
        assert again == reference
        assert hash(again) == hash(reference)
        assert format_poly(again) == format_poly(reference)


def test_cancellation_drops_terms():
    f = parse_poly("X^2 + Y", QYX)
    g = parse_poly("X^2 - Y", QYX)
    assert (f - g) == parse_poly("2*Y", QYX)
    assert (f - f).is_zero()
    assert not (f - f)


# -- exact division ------------------------------------------------------------------


@RINGS
def test_exact_divide_inverts_multiplication(ring):
    @settings(max_examples=40, deadline=None)
    @given(f=polys(ring, max_terms=4, max_exp=2), g=polys(ring, max_terms=3, max_exp=2))
    def check(f, g):
        if g.is_zero():
            return
        assert exact_divide(f * g, g) == f

    check()


def test_exact_divide_failures():
    x = parse_poly("X", QYX)
    y = parse_poly("Y", QYX)
    with pytest.raises(NonExactDivisionError):
        exact_divide(x, y)
    with pytest.raises(NonExactDivisionError):
        exact_divide(parse_poly("X + 1", QYX), x)
    with pytest.raises(ZeroPolynomialError):
        exact_divide(x, Polynomial.zero(QYX))
    # over ZZ the coefficients must divide too
    with pytest.raises(NonExactDivisionError):
        exact_divide(parse_poly("3X", ZX), parse_poly("2", ZX))
    assert exact_divide(parse_poly("4X", ZX), parse_poly("2", ZX)) == parse_poly("2X", ZX)
    assert exact_divide(Polynomial.zero(ZX), parse_poly("2", ZX)).is_zero()


# -- parsing ---------------------------------------------------------------------------


def test_parse_grammar_basics():
    assert parse_poly("2X", ZX) == parse_poly("2*X", ZX)
    assert parse_poly("X^2-2", ZX) == parse_poly("-2 + X^2", ZX)
    assert parse_poly("- X + 3", ZX) == parse_poly("3 - X", ZX)
    assert parse_poly("X - - X", ZX) == parse_poly("2*X", ZX)
    assert parse_poly("0", ZX).is_zero()
    assert parse_poly("X^0", ZX) == Polynomial.one(ZX)
    assert parse_poly("1/2 * Y*X", QYX) == parse_poly("Y*X", QYX).scale(
        QYX.domain.literal(1, 2)
    )


def test_parse_error_positions():
    with pytest.raises(ParseError) as e:
        parse_poly("X + + Y", QYX)
    assert "column 5" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_poly("X Y", QYX)
    assert "missing '*'" in str(e.value)
    with pytest.raises(ParseError):
        parse_poly("", QYX)
    with pytest.raises(ParseError):
        parse_poly("X +", QYX)
    with pytest.raises(ParseError):
        parse_poly("X^", QYX)
    with pytest.raises(ParseError):
        parse_poly("X^-2", QYX)
    with pytest.raises(ParseError):
        parse_poly("3 $ X", QYX)


def test_parse_unknown_and_reserved_names():
    with pytest.raises(ParseError):
        parse_poly("Q", QYX)
    with pytest.raises(ParseError) as e:
        parse_poly("_t0 + X", QYX)
    assert "'_'" in str(e.value)


def test_fraction_over_zz_is_a_coefficient_error():
    with pytest.raises(CoefficientError) as e:
        parse_poly("1/2 * X", ZX)
    assert not isinstance(e.value, ParseError)
    assert parse_poly("4/2 * X", ZX) == parse_poly("2X", ZX)


def test_fp_coefficients_reduce():
    r = RingSpec.parse("Fp(5)[X]")
    assert parse_poly("7*X", r) == parse_poly("2*X", r)
    assert parse_poly("5*X", r).is_zero()
    assert parse_poly("1/2", r) == parse_poly("3", r)
    with pytest.raises(CoefficientError):
        parse_poly("1/5", r)


# -- formatting -------------------------------------------------------------------------


def test_format_round_trip():
    rng = random.Random("fmt:2")
    for ring in (ZX, QYX, QYZW, F5):
        n = len(ring.variables)
        for _ in range(40):
            f = build(
                ring,
                [
                    (tuple(rng.randint(0, 3) for _ in range(n)), rng.randint(-7, 7))
                    for _ in range(rng.randint(0, 5))
                ],
            )
            assert parse_poly(format_poly(f), ring) == f


def test_format_style():
    assert format_poly(parse_poly("2*X", ZX)) == "2*X"
    assert format_poly(parse_poly("-X + 2", ZX)) == "-X + 2"
    assert format_poly(Polynomial.zero(ZX)) == "0"
    assert format_poly(parse_poly("X^2 - 2", ZX)) == "X^2 - 2"
    assert format_poly(parse_poly("Y*X - 1/2", QYX)) == "Y*X - 1/2"
    assert format_poly(parse_poly("W^5 + Y^3*W - 3*Y*Z*W^2 + Z^3", QYZW)) in (
        "W^5 - 3*Y*Z*W^2 + Y^3*W + Z^3",
        "W^5 + Y^3*W - 3*Y*Z*W^2 + Z^3",
    )


# -- substitution and transport ------------------------------------------------------------


def test_evaluate_map_is_a_homomorphism():
    target = RingSpec.parse("QQ[T]")
    t = Polynomial.variable(target, "T")
    images = {"Y": t**4, "Z": t**5, "W": t**3}
    rng = random.Random("map:3")
    for _ in range(25):
        f = build(QYZW, [(tuple(rng.randint(0, 2) for _ in range(3)), rng.randint(-4, 4))])
        g = build(QYZW, [(tuple(rng.randint(0, 2) for _ in range(3)), rng.randint(-4, 4))])
        assert evaluate_map(f + g, images, target) == evaluate_map(
            f, images, target
        ) + evaluate_map(g, images, target)
        assert evaluate_map(f * g, images, target) == evaluate_map(
            f, images, target
        ) * evaluate_map(g, images, target)


def test_evaluate_map_requires_all_used_images():
    target = RingSpec.parse("QQ[T]")
    t = Polynomial.variable(target, "T")
    f = parse_poly("Y + Z", QYZW)
    with pytest.raises(AlgebraError):
        evaluate_map(f, {"Y": t}, target)
    # unused variables need no image
    assert evaluate_map(parse_poly("Y^2", QYZW), {"Y": t}, target) == t**2


def test_transport_by_name():
    big = QYX.extend_aux("_u0")
    f = parse_poly("Y*X + 2", QYX)
    up = transport(f, big)
    assert up.ring == big
    assert transport(up, QYX) == f
    u = Polynomial.variable(big, "_u0")
    with pytest.raises(AlgebraError):
        transport(u, QYX)
    with pytest.raises(RingMismatchError):
        transport(parse_poly("X", ZX), QYX)


# -- monomial orders -------------------------------------------------------------------------


def random_exponents(rng, n, hi=6):
    return tuple(rng.randint(0, hi) for _ in range(n))


ORDERS = [
    Lex(),
    Lex(("Z", "W", "Y")),
    Grevlex(),
    BlockElim(("Y",)),
    BlockElim(("Y", "W"), inner_front="lex"),
    BlockElim(("Z",), inner_back="lex"),
]


@pytest.mark.parametrize("order", ORDERS, ids=[repr(o) for o in ORDERS])
def test_order_axioms(order):
    keyf = key_function(order, QYZW)
    rng = random.Random(f"orders:{order!r}")
    zero = (0, 0, 0)
    for _ in range(10_000):
        a = random_exponents(rng, 3)
        b = random_exponents(rng, 3)
        c = random_exponents(rng, 3)
        # totality with antisymmetry: equal keys only for equal monomials
        assert (keyf(a) == keyf(b)) == (a == b)
        # additivity gives multiplicativity of the induced order
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert (keyf(a) < keyf(b)) == (keyf(ac) < keyf(bc))
        # 1 is the least monomial, so the order is global
        assert keyf(zero) <= keyf(a)


def test_lex_and_grevlex_disagree_where_expected():
    lex = key_function(Lex(), QYZW)
    grev = key_function(Grevlex(), QYZW)
    y, z, w = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    yz, w2, y3 = (1, 1, 0), (0, 0, 2), (3, 0, 0)
    assert lex(y) > lex((0, 9, 9))  # lex ignores total degree
    assert grev((0, 9, 9)) > grev(y)
    assert grev(yz) > grev(w2)  # grevlex tie-break: later variables count against
    assert grev(y3) > grev((0, 0, 3))
    assert lex(z) > lex(w) and lex(y) > lex(z)


def test_elimination_property():
    rng = random.Random("elim:4")
    for front in (("Y",), ("W",), ("Y", "Z")):
        order = BlockElim(front)
        keyf = key_function(order, QYZW)
        fidx = [QYZW.index(v) for v in front]
        for _ in range(2000):
            a = random_exponents(rng, 3)
            b = random_exponents(rng, 3)
            a_has = any(a[i] for i in fidx)
            b_has = any(b[i] for i in fidx)
            if a_has and not b_has:
                assert keyf(a) > keyf(b)
            if b_has and not a_has:
                assert keyf(b) > keyf(a)


def test_order_validation():
    with pytest.raises(AlgebraError):
        key_function(Lex(("Y", "Z")), QYZW)  # permutation must cover all variables
    with pytest.raises(AlgebraError):
        key_function(BlockElim(("Q",)), QYZW)
    with pytest.raises(AlgebraError):
        BlockElim(("Y",), inner_front="weight")


def test_parse_order_forms():
    assert parse_order("grevlex", QYZW) == Grevlex()
    assert parse_order("lex", QYZW) == Lex()
    assert parse_order("lex:Z,W,Y", QYZW) == Lex(("Z", "W", "Y"))
    assert parse_order("elim:Y,Z", QYZW) == BlockElim(("Y", "Z"))
    with pytest.raises(AlgebraError):
        parse_order("elim:", QYZW)
    with pytest.raises(AlgebraError):
        parse_order("weighted", QYZW)


def test_sorted_terms_descending():
    f = parse_poly("X^2 + Y*X + Y^3 + 1", QYX)
    keys = [key_function(Grevlex(), QYX)(e) for e, _ in f.sorted_terms()]
    assert keys == sorted(keys, reverse=True)
