from fractions import Fraction

import pytest

from ogcoh.blockmap import (BlockMap, BlockShapeError, DecomposedSpace, FactBacked, Local, Scalar,
                            Summand, Unknown)
from ogcoh.graded import GradedDims
from ogcoh.linalg import RationalMatrix

PT = GradedDims.point(1)


def space(name, *summands):
    return DecomposedSpace(name, list(summands))


def test_totals_and_labels():
    s = space("S", Summand("a", "x", GradedDims((1, 0, 2)), 0), Summand("b", "x", GradedDims((1, 0, 2)), 2, 3))
    assert s.total == GradedDims((1, 0, 5, 0, 6))
    assert s.labels == ("a", "b")
    with pytest.raises(ValueError):
        space("S", Summand("a", "x", PT), Summand("a", "x", PT))
    with pytest.raises(ValueError):
        Summand("c", "x", PT, 1)


def test_scalar_rank():
    a = space("A", Summand("a", "x", GradedDims((3,))))
    b = space("B", Summand("b", "x", GradedDims((3,))))
    m = BlockMap(a, b, 0, [Scalar("a", "b", Fraction(2))])
    assert m.rank() == 3
    assert BlockMap(a, b, 0, [Scalar("a", "b", Fraction(0))]).rank() == 0


def test_scalar_shape_mismatch():
    a = space("A", Summand("a", "x", PT, 0))
    b = space("B", Summand("b", "x", PT, 2))
    with pytest.raises(BlockShapeError):
        BlockMap(a, b, 0, [Scalar("a", "b", Fraction(1))])
    with pytest.raises(BlockShapeError):
        BlockMap(a, b, 0, [Scalar("a", "zzz", Fraction(1))])


def test_fact_rank_capped():
    a = space("A", Summand("a", "x", GradedDims((2,))))
    b = space("B", Summand("b", "y", GradedDims((1,))))
    with pytest.raises(BlockShapeError):
        BlockMap(a, b, 0, [FactBacked(("a",), ("b",), "f", 2)])


def test_cancelling_scalars_are_exact():
    # [[1, 1], [1, 1]] on equal summands has rank 1
    a = space("A", Summand("a1", "x", GradedDims((2,))), Summand("a2", "x", GradedDims((2,))))
    b = space("B", Summand("b1", "x", GradedDims((2,))), Summand("b2", "x", GradedDims((2,))))
    terms = [Scalar(s, t, Fraction(1)) for s in ("a1", "a2") for t in ("b1", "b2")]
    iv = BlockMap(a, b, 0, terms).rank_interval()
    assert (iv.lower, iv.upper) == (2, 2)


def test_unknown_gives_interval():
    a = space("A", Summand("a", "x", GradedDims((2,))))
    b = space("B", Summand("b", "y", GradedDims((3,))))
    iv = BlockMap(a, b, 0, [Unknown(("a",), ("b",))]).rank_interval()
    assert (iv.lower, iv.upper) == (0, 2)


def test_peeling_around_unknown():
    # a column block of full row rank peels off losslessly
    a = space("A", Summand("a", "x", GradedDims((2,))), Summand("u", "y", GradedDims((5,))))
    b = space("B", Summand("b", "x", GradedDims((2,))))
    m = BlockMap(a, b, 0, [Scalar("a", "b", Fraction(-1)), Unknown(("u",), ("b",))])
    assert m.rank() == 2


def test_multiplicity_broadcast():
    # one class broadcast to 4 points, next to -id on those points
    a = space("A", Summand("s", "sigma", PT), Summand("p", "pt", PT, 0, 4))
    b = space("B", Summand("q", "pt", PT, 0, 4))
    terms = [Local("s", "q", RationalMatrix.from_rows([[1]]), "broadcast"), Scalar("p", "q", Fraction(-1))]
    assert BlockMap(a, b, 0, terms).rank() == 4
    # the transpose direction: a gather has rank 1 together with a diagonal
    c = space("C", Summand("t", "sigma", PT), Summand("r", "pt", PT, 0, 4))
    m = BlockMap(b, c, 0, [Local("q", "t", RationalMatrix.from_rows([[1]]), "gather"),
                           Scalar("q", "r", Fraction(1))])
    assert m.rank() == 4


def test_pattern_checked():
    a = space("A", Summand("p", "pt", PT, 0, 4))
    b = space("B", Summand("q", "pt", PT, 0, 2))
    with pytest.raises(BlockShapeError):
        BlockMap(a, b, 0, [Local("p", "q", RationalMatrix.from_rows([[1]]), "diag")])


def test_naive_rank_and_restriction():
    a = space("A", Summand("a", "x", GradedDims((2,))), Summand("u", "y", GradedDims((5,))))
    b = space("B", Summand("b", "x", GradedDims((2,))), Summand("c", "y", GradedDims((5,))))
    m = BlockMap(a, b, 0, [Scalar("a", "b", Fraction(1)), Unknown(("u",), ("c",))])
    assert m.naive_rank() == 2
    iv = m.rank_interval()
    assert (iv.lower, iv.upper) == (2, 7)
    assert m.restricted(["a"], ["b"]).rank() == 2
