import math
import random

import pytest
from hypothesis import given, strategies as st

from hai_welfare.errors import DomainError
from hai_welfare.model import (
    AiAgent,
    HumanAgent,
    ModelParams,
    approval_probability,
    approval_score,
    cognitive_cost,
    evaluate_interaction,
    interaction_utility,
    nbs_surplus,
)
from hai_welfare.trust import init_trust_state

import oracles

finite = st.floats(-50, 50, allow_nan=False)


@pytest.mark.parametrize(
    "args, expected",
    [((1.0, 1.0, 1.0), 2.0), ((1.5, 2.0, 5.0), 0.95), ((0.8, 1.0, 20.0), 0.85)],
)
def test_cognitive_cost_examples(args, expected):
    assert cognitive_cost(*args) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("expertise, time", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_cognitive_cost_rejects_nonpositive_denominators(expertise, time):
    with pytest.raises(DomainError):
        cognitive_cost(1.0, expertise, time)


def test_cognitive_cost_monotonicity_on_grid():
    grid = [0.5, 0.8, 1.0, 1.7, 3.0, 10.0]
    for c in grid:
        for e in grid:
            for t in grid:
                base = cognitive_cost(c, e, t)
                assert cognitive_cost(c + 0.1, e, t) > base
                assert cognitive_cost(c, e + 0.1, t) < base
                assert cognitive_cost(c, e, t + 0.1) < base


@pytest.mark.parametrize(
    "args, expected",
    [
        ((1.0, 1.0, 0.0, 0.0, 0.0), 1.0),
        ((0.8, 1.0, 0.5, 0.5, 0.6), -0.05),
        ((0.5, 0.8, 1.0, 1.0, 0.45), -1.05),
    ],
)
def test_interaction_utility_examples(args, expected):
    assert interaction_utility(*args) == pytest.approx(expected, abs=1e-12)


def test_interaction_utility_is_linear_per_coordinate():
    rng = random.Random(3)
    for _ in range(200):
        args = [rng.uniform(-2, 2) for _ in range(5)]
        for k in range(5):
            a, b, c = rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)

            def f(v, k=k):
                xs = list(args)
                xs[k] = v
                return interaction_utility(*xs)

            # Bilinear in (trust, signal): linear in each one with the other fixed.
            assert f(a + b) - f(a) == pytest.approx(f(c + b) - f(c), abs=1e-12)


@pytest.mark.parametrize(
    "args, expected",
    [((1.0, 1.0, 0.0, 0.0), 1.0), ((0.5, 1.2, 0.6, 0.0), 0.0), ((1.2, 1.1, 0.5, 0.5), 0.42)],
)
def test_nbs_surplus_examples(args, expected):
    assert nbs_surplus(*args) == pytest.approx(expected, abs=1e-12)


@given(finite, finite, finite, finite)
def test_nbs_surplus_nonnegative_and_zero_at_disagreement(uh, ua, dh, da):
    v = nbs_surplus(uh, ua, dh, da)
    assert v >= 0
    if uh <= dh or ua <= da:
        assert v == 0


def test_approval_score_examples():
    zero = ModelParams(phi=0, psi=0, alpha=0, eta=0, gamma=0, risk=0)
    assert approval_score(0, 0, 0, 0, zero, 0, 0, 0) == 0.0
    p = ModelParams(eta=0.5, phi=0.2, gamma=0.3)
    assert approval_score(-0.05, 0.5, 0.5, 0.6, p, 0.8, 0.0, 1.0) == pytest.approx(-0.20, abs=1e-12)
    p = ModelParams(eta=0, phi=0, gamma=1.0)
    assert approval_score(1.0, 0, 0.5, 0, p, 0.9, 3.0, 1.0) == pytest.approx(2.0, abs=1e-12)


def test_approval_probability_examples():
    assert approval_probability(0.0) == 0.5
    assert approval_probability(50.0) >= 1 - 1e-9
    assert approval_probability(-0.2) == pytest.approx(0.450166, abs=1e-6)
    # Extreme tails must not overflow.
    assert approval_probability(-1000.0) == 0.0
    assert approval_probability(1000.0) == 1.0


@given(st.floats(-30, 30, allow_nan=False))
def test_approval_probability_symmetry_and_range(s):
    p = approval_probability(s)
    assert 0 < p < 1
    assert p + approval_probability(-s) == pytest.approx(1.0, abs=1e-12)


@given(st.floats(-15, 15), st.floats(1e-3, 5))
def test_approval_probability_strictly_increasing(s, ds):
    assert approval_probability(s + ds) > approval_probability(s)


def _human(trust, lam, expertise, time, prior=10.0):
    return HumanAgent(0, lam, expertise, time, init_trust_state(trust, prior))


def test_evaluate_interaction_hand_chain(spec_params):
    rec = evaluate_interaction(_human(0.8, 0.5, 2.0, 10.0), AiAgent(0, 1.0, 1.0), spec_params)
    assert rec.cost == pytest.approx(0.6, abs=1e-12)
    assert rec.utility == pytest.approx(-0.05, abs=1e-12)
    assert rec.delta_u == pytest.approx(-0.05, abs=1e-12)
    assert rec.nbs == 0.0
    assert rec.score == pytest.approx(-0.20, abs=1e-12)
    assert rec.approval_prob == pytest.approx(0.450166, abs=1e-6)
    assert rec.surplus == 0.0
    assert rec.approved is False


def test_evaluate_interaction_balance_point():
    params = ModelParams(eta=0, phi=0, gamma=0, risk=0)
    # T*S = 0.5*1.2 = 0.6 = C = 1.0/2.0 + 1/10, so utility is zero. The score
    # still subtracts the cost once more on its own, leaving -C.
    rec = evaluate_interaction(_human(0.5, 0.7, 2.0, 10.0), AiAgent(0, 1.2, 1.0), params)
    assert rec.utility == pytest.approx(0.0, abs=1e-12)
    assert rec.score == pytest.approx(-0.6, abs=1e-12)
    assert rec.approval_prob == pytest.approx(approval_probability(-0.6), abs=1e-12)


def test_score_zero_gives_even_odds():
    params = ModelParams(eta=0, phi=0, gamma=0, risk=0)
    # Zero complexity and a huge time budget drive the cost to ~0.
    rec = evaluate_interaction(_human(0.5, 0.0, 1.0, 1e15), AiAgent(0, 1e-15, 0.0), params)
    assert rec.score == pytest.approx(0.0, abs=1e-12)
    assert rec.approval_prob == pytest.approx(0.5, abs=1e-12)


def _random_triple(rng):
    T = rng.uniform(0.01, 0.99)
    lam = rng.uniform(0, 2)
    expertise = rng.uniform(0.2, 3)
    time = rng.uniform(1, 25)
    S = rng.uniform(0.1, 2)
    cx = rng.uniform(0, 3)
    p = dict(
        phi=rng.uniform(0, 2), psi=rng.uniform(0, 1), alpha=rng.uniform(0, 1),
        eta=rng.uniform(0, 3), gamma=rng.uniform(0, 3), risk=rng.uniform(0, 2),
        u_h_independent=rng.uniform(-1, 1), u_a_independent=rng.uniform(-1, 1),
    )
    return T, lam, expertise, time, S, cx, p


def test_evaluate_interaction_matches_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        T, lam, e, t, S, cx, p = _random_triple(rng)
        # A prior of 1.0 keeps the posterior mean exactly T up to rounding.
        human = _human(T, lam, e, t, prior=1.0)
        rec = evaluate_interaction(human, AiAgent(0, S, cx), ModelParams(**p))
        want = oracles.interaction(human.trust, lam, e, t, S, cx, p)
        for key, value in want.items():
            assert math.isclose(getattr(rec, key), value, rel_tol=0, abs_tol=1e-12), key
        assert rec.surplus >= 0 and rec.nbs >= 0


def test_evaluate_interaction_propagates_domain_error(spec_params):
    human = _human(0.6, 0.5, 1.0, 10.0)
    human.expertise = 0.0
    with pytest.raises(DomainError):
        evaluate_interaction(human, AiAgent(0, 1.0, 1.0), spec_params)
