"""Expression grammar: parsing, evaluation, printing, and the printed
product identities expressed in expression syntax."""

import pytest

from geobyte import (
    Multivector,
    basis_element,
    evaluate_text,
    format_expression,
    parse,
    paravector,
    structure_element,
)
from geobyte._kernels import BLADE_NAMES
from geobyte.clusters import LABELS
from geobyte.errors import ParseError
from geobyte.expressions import BinOp, Const, Func, Imaginary, Literal, Neg, evaluate

from conftest import random_multivector

E = {name: basis_element(name) for name in BLADE_NAMES}

# the eight byte products: each blade as a signed paravector product
BYTE_EXPRESSIONS = {
    "e0": "(P1+N1)*(P2+N2)*(P3+N3)",
    "e1": "(P1-N1)*(P2+N2)*(P3+N3)",
    "e2": "(P1+N1)*(P2-N2)*(P3+N3)",
    "e3": "(P1+N1)*(P2+N2)*(P3-N3)",
    "e12": "(P1-N1)*(P2-N2)*(P3+N3)",
    "e23": "(P1+N1)*(P2-N2)*(P3-N3)",
    "e13": "(P1-N1)*(P2+N2)*(P3-N3)",
    "e123": "(P1-N1)*(P2-N2)*(P3-N3)",
}

# the eight structure elements as ordered paravector triples
STRUCTURE_EXPRESSIONS = {
    "A": "P1*P2*P3",
    "B": "N1*P2*P3",
    "C": "P1*N2*P3",
    "D": "P1*P2*N3",
    "Dbar": "N1*N2*P3",
    "Cbar": "N1*P2*N3",
    "Bbar": "P1*N2*N3",
    "Abar": "N1*N2*N3",
}

# the six cube faces as structure-element sums
FACE_EXPRESSIONS = {
    "P1": "A + Bbar + C + D",
    "N1": "Abar + B + Cbar + Dbar",
    "P2": "A + B + Cbar + D",
    "N2": "Abar + Bbar + C + Dbar",
    "P3": "A + B + C + Dbar",
    "N3": "Abar + Bbar + Cbar + D",
}


def test_byte_product_expressions():
    for blade, text in BYTE_EXPRESSIONS.items():
        assert evaluate_text(text) == E[blade], blade


def test_structure_product_expressions():
    for label, text in STRUCTURE_EXPRESSIONS.items():
        assert evaluate_text(text) == structure_element(label), label


def test_paravector_sum_difference_expressions():
    for axis in (1, 2, 3):
        assert evaluate_text(f"P{axis}+N{axis}") == E["e0"]
        assert evaluate_text(f"P{axis}-N{axis}") == E[f"e{axis}"]


def test_face_expressions():
    for name, text in FACE_EXPRESSIONS.items():
        axis = int(name[1])
        pol = "positive" if name[0] == "P" else "negative"
        assert evaluate_text(text) == paravector(axis, pol).value, name


def test_evaluation_fixtures():
    assert evaluate_text("P3*N3") == Multivector.zero()
    assert evaluate_text("1/2*(e0+e3)") == paravector(3, "positive").value
    assert evaluate_text("i*i") == -E["e0"]
    assert evaluate_text("A + Abar") == 0.25 * (
        E["e0"] + E["e12"] + E["e23"] + E["e13"]
    )
    assert evaluate_text("rev(e12)") == -E["e12"]
    assert evaluate_text("bar(A)") == structure_element("Abar")
    assert evaluate_text("conj(e1)") == -E["e1"]
    assert evaluate_text("-2*e1") == -2.0 * E["e1"]
    assert evaluate_text("3/4") == 0.75 * E["e0"]
    assert evaluate_text("  e1 * e2 ") == E["e12"]


def test_ast_shape():
    tree = parse("1/2*(e0+e3)")
    assert isinstance(tree, BinOp) and tree.op == "*"
    assert tree.left == Literal(0.5)
    assert tree.right == BinOp("+", Const("e0"), Const("e3"))
    assert parse("-i") == Neg(Imaginary())
    assert parse("rev(A)") == Func("rev", Const("A"))
    assert evaluate(tree) == evaluate_text("P3")


def test_parse_errors_with_offsets():
    with pytest.raises(ParseError) as exc:
        parse("e1*")
    assert exc.value.offset == 3
    with pytest.raises(ParseError) as exc:
        parse("(e1+e2")
    assert exc.value.offset == 6
    assert ")" in exc.value.expected
    with pytest.raises(ParseError) as exc:
        parse("e1 e2")
    assert exc.value.offset == 3
    with pytest.raises(ParseError) as exc:
        parse("foo+1")
    assert exc.value.offset == 0
    with pytest.raises(ParseError) as exc:
        parse("1/")
    assert exc.value.offset == 2
    with pytest.raises(ParseError) as exc:
        parse("e1 @ e2")
    assert exc.value.offset == 3
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("rev e1")


def test_precedence_and_associativity():
    assert evaluate_text("e1+e2*e3") == E["e1"] + E["e23"]
    assert evaluate_text("-e1*e2") == -(E["e12"])
    # products are left-associative; the ordered triple matters
    assert evaluate_text("e1*e2*e3") == E["e123"]


def test_format_round_trip(rng):
    for _ in range(50):
        m = random_multivector(rng)
        assert evaluate_text(format_expression(m)) == m
    assert format_expression(Multivector.zero()) == "0*e0"
    assert evaluate_text(format_expression(Multivector.zero())) == Multivector.zero()
    for label in LABELS:
        s = structure_element(label)
        assert evaluate_text(format_expression(s)) == s


def test_format_shape():
    assert format_expression(E["e1"]) == "1.0*e1"
    assert format_expression(-E["e1"] + 0.5 * E["e12"]) == "-1.0*e1 + 0.5*e12"
