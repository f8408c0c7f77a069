import random
from fractions import Fraction

import pytest
from structlog.testing import capture_logs

from permcensus.core.errors import InsufficientData, NonIntegralTerm, SingularLeadingCoefficient
from permcensus.core.formulas import theorem1_closed, theorem3_reindexed
from permcensus.core.recfit import (
    PolyRecurrence,
    apply,
    eval_poly,
    fit,
    minimum_terms,
    verify,
)
from permcensus.core.types import Sequence
from permcensus.log import configure_logging

THEOREM1 = PolyRecurrence(((4,), (-4,), (1,)))
THEOREM3 = PolyRecurrence(((-4, -2), (0, 1)))
CONSTANT = PolyRecurrence(((-1,), (1,)))


def test_eval_poly():
    assert eval_poly((4, 2), 3) == 10
    assert eval_poly((0,), 7) == 0
    assert eval_poly((1, 0, 1), -2) == 5


def test_fit_theorem1_terms():
    seq = Sequence(4, (4, 12, 32, 80, 192, 448, 1024))
    rec = fit(seq, max_order=2, max_degree=0, guard=2)
    assert rec == THEOREM1
    assert rec.describe() == "4 a(m) - 4 a(m+1) + a(m+2) = 0"
    assert verify(rec, seq)


def test_fit_theorem3_terms():
    seq = Sequence(1, (2, 12, 48, 160, 480, 1344, 3584))
    rec = fit(seq, max_order=1, max_degree=1, guard=2)
    assert rec == THEOREM3
    assert rec.describe() == "(m) a(m+1) - (2m+4) a(m) = 0"
    assert rec.to_json() == {"order": 1, "degree": 1, "coefficients": [[-4, -2], [0, 1]]}


def test_fit_constant_and_geometric():
    assert fit(Sequence(1, (5, 5, 5, 5, 5)), 1, 0, 2) == CONSTANT
    geometric = fit(Sequence(1, (1, 2, 4, 8, 16)), 1, 0, 2)
    assert geometric == PolyRecurrence(((-2,), (1,)))
    assert geometric.describe() == "2 a(m) - a(m+1) = 0"


def test_fit_returns_none_without_recurrence():
    primes = Sequence(0, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37))
    assert fit(primes, max_order=1, max_degree=0) is None


def test_fit_needs_enough_terms():
    assert minimum_terms(1, 0, 2) == 5
    with pytest.raises(InsufficientData):
        fit(Sequence(0, (1, 2, 4, 8)), 2, 1, guard=2)
    with pytest.raises(ValueError):
        fit(Sequence(0, (1, 2, 4, 8, 16)), 0, 1)


def test_fit_tries_lower_order_before_lower_degree():
    seq = Sequence(4, (4, 12, 32, 80, 192, 448, 1024))
    configure_logging("DEBUG")
    try:
        with capture_logs() as logs:
            rec = fit(seq, max_order=2, max_degree=1)
    finally:
        configure_logging("WARNING")
    assert rec == PolyRecurrence(((2, -2), (-2, 1)))
    assert rec.describe() == "(2m-2) a(m) - (m-2) a(m+1) = 0"
    events = [(e["event"], e.get("order"), e.get("degree"), e.get("reason")) for e in logs]
    assert ("recfit.shape.rejected", 1, 0, "trivial null space") in events
    assert ("recfit.shape.accepted", 1, 1, None) in events


def test_fit_rejects_shapes_without_enough_terms():
    primes = Sequence(0, (2, 3, 5, 7, 11, 13, 17, 19))
    configure_logging("DEBUG")
    try:
        with capture_logs() as logs:
            assert fit(primes, max_order=1, max_degree=2) is None
    finally:
        configure_logging("WARNING")
    reasons = {(e.get("order"), e.get("degree")): e.get("reason") for e in logs}
    assert reasons[(1, 2)] == "too few terms"
    assert reasons[(1, 0)] == "trivial null space"


def test_apply_examples():
    assert apply(THEOREM1, Sequence(4, (4, 12)), 10).terms == (4, 12, 32, 80, 192, 448, 1024)
    assert apply(THEOREM3, Sequence(1, (2,)), 7).terms == (2, 12, 48, 160, 480, 1344, 3584)
    assert apply(CONSTANT, Sequence(1, (7,)), 5).terms == (7, 7, 7, 7, 7)


def test_apply_truncates_when_target_is_inside_seed():
    assert apply(CONSTANT, Sequence(1, (7, 7, 7)), 2).terms == (7, 7)


def test_apply_rational_and_integral_modes():
    halving = PolyRecurrence(((-1,), (2,)))
    assert apply(halving, Sequence(0, (1,)), 2).terms == (1, Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(NonIntegralTerm) as excinfo:
        apply(halving, Sequence(0, (1,)), 2, integral=True)
    assert excinfo.value.index == 1


def test_apply_singular_leading_coefficient():
    with pytest.raises(SingularLeadingCoefficient) as excinfo:
        apply(THEOREM3, Sequence(0, (1,)), 2)
    assert excinfo.value.index == 0


def test_apply_needs_seed():
    with pytest.raises(InsufficientData):
        apply(THEOREM1, Sequence(0, (1,)), 5)


def test_verify_examples():
    assert not verify(CONSTANT, Sequence(0, (1, 2)))
    closed = Sequence(3, tuple(theorem1_closed(n) for n in range(3, 65)))
    assert verify(THEOREM1, closed)
    assert verify(THEOREM3, theorem3_reindexed(40))
    with pytest.raises(InsufficientData):
        verify(THEOREM1, Sequence(0, (1, 2)))


def test_normalization():
    rec = PolyRecurrence.normalized([[Fraction(1, 2)], [Fraction(-1, 4)]])
    assert rec.coefficients == ((-2,), (1,))
    rec = PolyRecurrence.normalized([[Fraction(8), Fraction(4)], [Fraction(0), Fraction(-4)]])
    assert rec.coefficients == ((-2, -1), (0, 1))


def test_recurrence_validation():
    with pytest.raises(ValueError):
        PolyRecurrence(((1,),))
    with pytest.raises(ValueError):
        PolyRecurrence(((1,), (0, 0)))
    assert PolyRecurrence(((1, 0, 0), (1,))).degree == 0


def test_describe_with_higher_degree_coefficients():
    rec = PolyRecurrence(((0, 0, -1), (1, 3)))
    assert rec.describe() == "(m^2) a(m) - (3m+1) a(m+1) = 0"
    assert str(rec) == rec.describe()


def _random_recurrence(rng: random.Random) -> PolyRecurrence:
    order = rng.randint(1, 3)
    degree = rng.randint(0, 2)
    coefficients = []
    for t in range(order):
        poly = [rng.randint(-3, 3) for _ in range(degree + 1)]
        if t == 0 and poly[0] == 0:
            poly[0] = rng.choice([-2, -1, 1, 2])
        coefficients.append(tuple(poly))
    # Positive on m >= 0, so the top coefficient never vanishes.
    top = [rng.randint(1, 3)] + [rng.randint(0, 2) for _ in range(degree)]
    coefficients.append(tuple(top))
    return PolyRecurrence(tuple(coefficients))


def test_round_trip_on_random_recurrences():
    rng = random.Random(1729)
    for _ in range(100):
        rec = _random_recurrence(rng)
        r, d = rec.order, rec.degree
        seed = Sequence(0, tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(r)))
        length = minimum_terms(r, d, 2) + 3
        data = apply(rec, seed, length - 1)
        found = fit(data, max_order=r, max_degree=d, guard=2)
        assert found is not None, rec
        assert verify(found, data)
        extended = apply(rec, seed, length - 1 + 20)
        assert verify(found, extended), (rec, found)
