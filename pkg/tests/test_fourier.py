import pytest

from genexp.fourier import (
    PropagationError,
    WeightFunction,
    c_closed_form,
    inner_with_one,
    solve_system,
)
from genexp.laurent import ONE, T, T_INV, ZERO, LaurentPolynomial
from genexp.weights import (
    Weight,
    dominant_first_layer_weights,
    first_layer_weights,
    simple_root,
    theta,
)


def test_closed_form_examples():
    assert c_closed_form(Weight((0, 0))) == ONE
    assert c_closed_form(Weight((1, -1))) == T - ONE
    assert c_closed_form(Weight((-1, 1))) == ZERO
    with pytest.raises(ValueError):
        c_closed_form(Weight((2, 0, -2)))


def test_solve_system_rank_one_hand_solution():
    # Hand derivation: c(-1,1) = 0 by the vanishing equation for the dominant
    # (1,-1); the propagation equation at (1,-1) with pairing 2 then reads
    # 0 - t^-1 X = -1 + t^-1, forcing X = t - 1; the zero weight is seeded 1.
    assert solve_system(1) == {
        Weight((0, 0)): ONE,
        Weight((1, -1)): T - ONE,
        Weight((-1, 1)): ZERO,
    }


def test_solve_system_rank_two_vanishing():
    table = solve_system(2)
    assert table[Weight((-1, 0, 1))] == ZERO  # theta-reflection of dominant (1,0,-1)
    assert table[Weight.zero(2)] == ONE


def test_solver_equals_closed_form_small_ranks():
    for n in range(1, 5):
        table = solve_system(n)
        pool = first_layer_weights(n)
        assert set(table) == set(pool)
        for w in pool:
            assert table[w] == c_closed_form(w), w


def test_closed_form_satisfies_defining_equations_directly():
    # Re-check without the solver: substitute the closed form into the
    # propagation equation at every first-layer weight and positive pairing.
    for n in range(1, 5):
        for w in first_layer_weights(n):
            for i in range(1, n + 1):
                if w.pairing_coroot(i) <= 0:
                    continue
                alpha = simple_root(i, n)
                reflected = w.simple_reflect(i)
                lhs = c_closed_form(reflected) - T_INV * c_closed_form(w)
                rhs = T_INV * c_closed_form(reflected + alpha) - c_closed_form(w - alpha)
                assert lhs == rhs, (w, i)


def test_theta_reflection_vanishes_for_nonzero_dominant():
    for n in range(1, 6):
        for w in dominant_first_layer_weights(n):
            if w:
                assert c_closed_form(w.theta_reflect()) == ZERO, w


def test_solve_system_rank_cap():
    with pytest.raises(ValueError):
        solve_system(8)
    with pytest.raises(ValueError):
        solve_system(0)
    assert PropagationError.__bases__ == (RuntimeError,)


def test_weight_function_basics():
    f = WeightFunction({Weight((1, -1)): 1, Weight((0, 0)): ZERO})
    assert f.support() == {Weight((1, -1))}
    assert f[Weight((0, 0))] == ZERO
    g = WeightFunction.delta(Weight((0, 0))) + f
    assert len(g) == 2
    assert (T - 1) * WeightFunction.delta(Weight((0, 0))) == WeightFunction(
        {Weight((0, 0)): T - ONE}
    )
    with pytest.raises(ValueError):
        WeightFunction({Weight((1, -1)): 1, Weight((0, 0, 0)): 1})


def test_inner_with_one_examples():
    assert inner_with_one(WeightFunction.delta(Weight.zero(3))) == ONE
    # full character of the rank-1 adjoint: (t-1) + 1 + 0 = t
    chi = WeightFunction(
        {Weight((1, -1)): 1, Weight((0, 0)): 1, Weight((-1, 1)): 1}
    )
    assert inner_with_one(chi) == T
    # monomial function of (1,-1): orbit sum over the local orbit
    m = WeightFunction({Weight((1, -1)): 1, Weight((-1, 1)): 1})
    assert inner_with_one(m) == T - ONE
    assert inner_with_one(m) == LaurentPolynomial.monomial(1) * (ONE - T_INV)


def test_inner_with_one_rejects_non_first_layer():
    with pytest.raises(ValueError):
        inner_with_one(WeightFunction.delta(Weight((2, 0, -2))))


def test_solver_consistency_checks_cover_orbit_cycles():
    # Orbits at these ranks contain many closed propagation loops; the solver
    # compares every non-tree edge and would raise PropagationError on any
    # path dependence.
    for n in (3, 4):
        solve_system(n)
