import cmath
import math
import random

import numpy as np
import pytest

from hypermat import linalg
from hypermat.calculus import PochhammerChain, random_commuting_family
from hypermat.errors import DomainViolation, NotConverged
from hypermat.series import (
    EvalPoint,
    FunctionKind,
    ParameterSet,
    SeriesConfig,
    appell_f1,
    appell_f2,
    appell_f3,
    appell_f4,
    check_domain,
    evaluate,
    gauss_2f1,
)

from oracles import scalar_value

TWO_LN_TWO = 1.3862943611198906

# Frozen spot values from the scalar double-sum oracle.
F1_SPOT = 1.5415067982725830  # F1(1,1,1;2; 0.3, 0.4)
F2_SPOT = 1.3093208994922451  # F2(1,1,1;2,2; 0.25, 0.2)
F3_SPOT = 1.4956906339736605  # F3(1,1,1,1;2; 0.3, 0.4)
F4_SPOT = 1.1605485025820499  # F4(1,1;2,2; 0.15, 0.1)

ALL_KINDS = list(FunctionKind)


def scal(value):
    return np.array([[value]], dtype=complex)


def scalar_params(kind, values):
    return ParameterSet(kind, {name: scal(v) for name, v in values.items()})


def family_params(kind, family):
    return ParameterSet(
        kind, {name: family.realize(name) for name in kind.parameter_names}
    )


def in_domain_point(kind, rng):
    def polar(mag):
        phase = 2 * math.pi * rng.random()
        return mag * cmath.exp(1j * phase)

    if kind is FunctionKind.GAUSS_2F1:
        return EvalPoint(polar(0.05 + 0.25 * rng.random()))
    if kind is FunctionKind.APPELL_F2:
        mx = 0.05 + 0.2 * rng.random()
        return EvalPoint(polar(mx), polar(0.05 + rng.random() * (0.4 - mx)))
    if kind is FunctionKind.APPELL_F4:
        rx = 0.1 + 0.4 * rng.random()
        ry = 0.1 + rng.random() * (0.6 - rx)
        return EvalPoint(polar(rx**2), polar(ry**2))
    return EvalPoint(polar(0.05 + 0.25 * rng.random()), polar(0.05 + 0.25 * rng.random()))


def test_domain_examples():
    assert check_domain(FunctionKind.APPELL_F2, EvalPoint(0.4, 0.5))
    assert not check_domain(FunctionKind.APPELL_F4, EvalPoint(0.25, 0.25))
    assert check_domain(FunctionKind.GAUSS_2F1, EvalPoint(0.0))
    assert not check_domain(FunctionKind.GAUSS_2F1, EvalPoint(1.0))
    assert check_domain(FunctionKind.APPELL_F1, EvalPoint(0.99, -0.99))
    assert not check_domain(FunctionKind.APPELL_F2, EvalPoint(0.6, 0.4))


def test_gauss_at_zero_is_identity():
    fam = random_commuting_family(3, FunctionKind.GAUSS_2F1.parameter_names, seed=1)
    report = gauss_2f1(family_params(FunctionKind.GAUSS_2F1, fam), EvalPoint(0.0))
    assert np.array_equal(report.value, np.eye(3))
    assert report.converged


def test_gauss_zero_numerator_parameter():
    params = ParameterSet(
        FunctionKind.GAUSS_2F1,
        {"A": scal(1.0), "B": linalg.zeros(1), "C": scal(2.0)},
    )
    report = gauss_2f1(params, EvalPoint(0.7))
    assert np.array_equal(report.value, np.eye(1))


def test_gauss_closed_form_log():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.0, "B": 1.0, "C": 2.0})
    value = gauss_2f1(params, EvalPoint(0.5)).value[0, 0]
    assert abs(value - TWO_LN_TWO) <= 1e-10


def test_gauss_closed_form_geometric():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 2.0, "B": 1.0, "C": 2.0})
    value = gauss_2f1(params, EvalPoint(0.3)).value[0, 0]
    assert abs(value - 1.0 / 0.7) <= 1e-10


@pytest.mark.parametrize(
    "fn,kind,values,point,expected",
    [
        (appell_f1, FunctionKind.APPELL_F1,
         {"A": 1.0, "B": 1.0, "Bp": 1.0, "C": 2.0}, (0.3, 0.4), F1_SPOT),
        (appell_f2, FunctionKind.APPELL_F2,
         {"A": 1.0, "B": 1.0, "Bp": 1.0, "C": 2.0, "Cp": 2.0}, (0.25, 0.2), F2_SPOT),
        (appell_f3, FunctionKind.APPELL_F3,
         {"A": 1.0, "Ap": 1.0, "B": 1.0, "Bp": 1.0, "C": 2.0}, (0.3, 0.4), F3_SPOT),
        (appell_f4, FunctionKind.APPELL_F4,
         {"A": 1.0, "B": 1.0, "C": 2.0, "Cp": 2.0}, (0.15, 0.1), F4_SPOT),
    ],
)
def test_appell_frozen_spot_values(fn, kind, values, point, expected):
    report = fn(scalar_params(kind, values), EvalPoint(*point))
    assert abs(report.value[0, 0] - expected) <= 1e-10


@pytest.mark.parametrize("kind", [k for k in ALL_KINDS if k.is_two_variable])
def test_appell_origin_is_identity(kind):
    fam = random_commuting_family(2, kind.parameter_names, seed=2)
    report = evaluate(family_params(kind, fam), EvalPoint(0.0, 0.0))
    assert np.array_equal(report.value, np.eye(2))


@pytest.mark.parametrize("kind", [k for k in ALL_KINDS if k.is_two_variable])
def test_appell_y_zero_reduces_to_gauss(kind):
    fam = random_commuting_family(
        2, ("A", "Ap", "B", "Bp", "C", "Cp"), seed=3
    )
    x = 0.23 + 0.08j
    gauss = gauss_2f1(
        ParameterSet(
            FunctionKind.GAUSS_2F1,
            {"A": fam.realize("A"), "B": fam.realize("B"), "C": fam.realize("C")},
        ),
        EvalPoint(x),
    ).value
    reduced = evaluate(family_params(kind, fam), EvalPoint(x, 0.0)).value
    assert np.linalg.norm(reduced - gauss) <= 1e-12 * np.linalg.norm(gauss)


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_scalar_reduction_oracle(kind):
    rng = random.Random(hash(kind.value) % 1000)
    for trial in range(8):
        fam = random_commuting_family(1, kind.parameter_names, seed=100 + trial)
        spectra = {name: fam.spectra[name][0] for name in kind.parameter_names}
        point = in_domain_point(kind, rng)
        report = evaluate(family_params(kind, fam), point)
        expected = scalar_value(kind.value, spectra, point.x, point.y)
        assert abs(report.value[0, 0] - expected) <= 1e-10 * (1.0 + abs(expected))


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_diagonal_oracle(kind):
    # Master correctness property: on a shared eigenbasis the matrix value is
    # the scalar value applied eigenvalue-by-eigenvalue.
    fam = random_commuting_family(3, kind.parameter_names, seed=11)
    rng = random.Random(31)
    p, p_inv = fam.transform, fam.transform_inverse
    for trial in range(4):
        point = in_domain_point(kind, rng)
        report = evaluate(family_params(kind, fam), point)
        scalars = [
            scalar_value(
                kind.value,
                {name: fam.spectra[name][i] for name in kind.parameter_names},
                point.x,
                point.y,
            )
            for i in range(3)
        ]
        expected = p @ np.diag(scalars) @ p_inv
        assert np.linalg.norm(report.value - expected) <= 1e-9 * (
            1.0 + np.linalg.norm(expected)
        )


def test_printed_order_is_load_bearing():
    # With a non-commuting (B, C) pair, swapping (B)_n (C)_n^{-1} into
    # (C)_n^{-1} (B)_n must visibly change the sum; this guards against any
    # future "simplification" that assumes commutativity.
    a = 1.2 * np.eye(2, dtype=complex)
    b = np.array([[1.0, 1.0], [0.0, 2.0]], dtype=complex)
    c = np.array([[2.0, 0.0], [1.0, 3.0]], dtype=complex)
    assert linalg.commutator_norm(b, c) > 0.1
    x = 0.4
    cfg = SeriesConfig()
    params = ParameterSet(FunctionKind.GAUSS_2F1, {"A": a, "B": b, "C": c})
    printed = gauss_2f1(params, EvalPoint(x), cfg).value

    chain_a = PochhammerChain.for_products(a)
    chain_b = PochhammerChain.for_products(b)
    chain_c = PochhammerChain.for_inverses(c)
    reversed_total = np.zeros((2, 2), dtype=complex)
    coeff = 1.0
    for n in range(80):
        if n:
            coeff *= x / n
        reversed_total += (
            chain_a.product(n) @ chain_c.inverse(n) @ chain_b.product(n)
        ) * coeff
    assert np.linalg.norm(printed - reversed_total) > 10 * cfg.tol


def test_symmetry_under_commutation():
    fam = random_commuting_family(3, ("A", "B", "C"), seed=17)
    a, b, c = fam.realize("A"), fam.realize("B"), fam.realize("C")
    assert linalg.commutator_norm(a, b) <= 1e-11 * (
        linalg.frobenius_norm(a) * linalg.frobenius_norm(b)
    )
    x = EvalPoint(0.27 - 0.05j)
    direct = gauss_2f1(
        ParameterSet(FunctionKind.GAUSS_2F1, {"A": a, "B": b, "C": c}), x
    ).value
    swapped = gauss_2f1(
        ParameterSet(FunctionKind.GAUSS_2F1, {"A": b, "B": a, "C": c}), x
    ).value
    assert np.linalg.norm(direct - swapped) <= 1e-10 * (1.0 + np.linalg.norm(direct))


def test_truncation_monotone_in_tol():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.3, "B": 0.7, "C": 2.1})
    tols = [1e-4, 1e-6, 1e-8, 1e-10, 1e-12]
    degrees = [
        gauss_2f1(params, EvalPoint(0.45), SeriesConfig(tol=t)).degrees_used
        for t in tols
    ]
    assert degrees == sorted(degrees)


def test_report_invariant_on_convergence():
    fam = random_commuting_family(2, FunctionKind.APPELL_F2.parameter_names, seed=23)
    cfg = SeriesConfig(tol=1e-10)
    report = evaluate(family_params(FunctionKind.APPELL_F2, fam), EvalPoint(0.2, 0.15), cfg)
    assert report.converged
    assert report.last_increment_norm <= cfg.tol * (
        1.0 + np.linalg.norm(report.value)
    )


def test_domain_violation_raised():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.0, "B": 1.0, "C": 2.0})
    with pytest.raises(DomainViolation):
        gauss_2f1(params, EvalPoint(1.0))


def test_domain_guard_can_be_disabled():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.0, "B": -3.0, "C": 2.0})
    # Terminating series: (B)_n vanishes past n = 3, so |x| = 1 is harmless.
    cfg = SeriesConfig(enforce_domain=False)
    report = gauss_2f1(params, EvalPoint(1.0), cfg)
    assert report.converged


def test_not_converged_carries_partial_report():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.0, "B": 1.0, "C": 2.0})
    with pytest.raises(NotConverged) as err:
        gauss_2f1(params, EvalPoint(0.95), SeriesConfig(max_degree=10))
    assert err.value.report is not None
    assert not err.value.report.converged


def test_parameter_set_validation():
    with pytest.raises(ValueError):
        ParameterSet(FunctionKind.GAUSS_2F1, {"A": scal(1.0), "B": scal(1.0)})
    with pytest.raises(Exception):
        ParameterSet(
            FunctionKind.GAUSS_2F1,
            {"A": scal(1.0), "B": scal(1.0), "C": np.eye(2, dtype=complex)},
        )


def test_point_arity_enforced():
    params = scalar_params(FunctionKind.GAUSS_2F1, {"A": 1.0, "B": 1.0, "C": 2.0})
    with pytest.raises(ValueError):
        gauss_2f1(params, EvalPoint(0.1, 0.1))
    fam = random_commuting_family(1, FunctionKind.APPELL_F1.parameter_names, seed=4)
    with pytest.raises(ValueError):
        appell_f1(family_params(FunctionKind.APPELL_F1, fam), EvalPoint(0.1))
