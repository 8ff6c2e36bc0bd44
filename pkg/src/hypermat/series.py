"""Truncated-series evaluation of the Gauss and Appell matrix functions.

Five function kinds are supported, all with square complex matrix parameters
of one common order r:

    2F1(A, B; C; x)          sum_n (A)_n (B)_n (C)_n^{-1} x^n / n!
    F1(A, B, B'; C; x, y)    sum   (A)_{m+n} (B)_m (B')_n (C)_{m+n}^{-1}
    F2(A, B, B'; C, C')      sum   (A)_{m+n} (B)_m (B')_n (C)_m^{-1} (C')_n^{-1}
    F3(A, A', B, B'; C)      sum   (A)_m (A')_n (B)_m (B')_n (C)_{m+n}^{-1}
    F4(A, B; C, C')          sum   (A)_{m+n} (B)_{m+n} (C)_m^{-1} (C')_n^{-1}

with the two-variable kinds weighted by x^m y^n / (m! n!). The parameters do
not commute in general, so each term is assembled by fresh left-to-right
multiplication of cached Pochhammer chain entries in exactly the order the
definitions above display; nothing is ever algebraically reordered.

Double series are summed diagonal by diagonal (total degree m + n), and
truncation stops once a configured number of consecutive diagonal sums fall
below tol * (1 + ||partial sum||_F). A hard max_degree cap guards divergence;
hitting it raises NotConverged with the partial report attached.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from . import linalg
from .calculus import PochhammerChain
from .errors import DimensionMismatch, DomainViolation, NotConverged
from .linalg import Matrix


class FunctionKind(enum.Enum):
    """The five supported series, tagged by their conventional names."""

    GAUSS_2F1 = "2F1"
    APPELL_F1 = "F1"
    APPELL_F2 = "F2"
    APPELL_F3 = "F3"
    APPELL_F4 = "F4"

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return _PARAMETER_NAMES[self]

    @property
    def is_two_variable(self) -> bool:
        return self is not FunctionKind.GAUSS_2F1


# Primed parameters are spelled with a trailing "p" so names survive JSON,
# CLI arguments and file systems unscathed.
_PARAMETER_NAMES = {
    FunctionKind.GAUSS_2F1: ("A", "B", "C"),
    FunctionKind.APPELL_F1: ("A", "B", "Bp", "C"),
    FunctionKind.APPELL_F2: ("A", "B", "Bp", "C", "Cp"),
    FunctionKind.APPELL_F3: ("A", "Ap", "B", "Bp", "C"),
    FunctionKind.APPELL_F4: ("A", "B", "C", "Cp"),
}


@dataclass(frozen=True, eq=False)
class ParameterSet:
    """The named parameter matrices of one function kind, one common order."""

    kind: FunctionKind
    matrices: dict[str, Matrix]

    def __post_init__(self):
        expected = set(self.kind.parameter_names)
        present = set(self.matrices)
        if present != expected:
            raise ValueError(
                f"{self.kind.value} needs parameters {sorted(expected)}, "
                f"got {sorted(present)}"
            )
        validated = {
            name: linalg.as_matrix(m) for name, m in self.matrices.items()
        }
        orders = {m.shape for m in validated.values()}
        if len(orders) != 1:
            raise DimensionMismatch(f"parameter orders differ: {sorted(orders)}")
        object.__setattr__(self, "matrices", validated)

    @property
    def order(self) -> int:
        return next(iter(self.matrices.values())).shape[0]

    def __getitem__(self, name: str) -> Matrix:
        return self.matrices[name]

    def shifted(self, name: str, amount: int) -> "ParameterSet":
        """A copy with ``amount * I`` added to the named parameter."""
        eye = linalg.identity(self.order)
        updated = dict(self.matrices)
        updated[name] = updated[name] + amount * eye
        return ParameterSet(self.kind, updated)

    def renamed(self, mapping: dict[str, str]) -> "ParameterSet":
        """A copy with parameters moved to new slots (used for A <-> B swaps)."""
        updated = {mapping.get(name, name): m for name, m in self.matrices.items()}
        return ParameterSet(self.kind, updated)


@dataclass(frozen=True)
class EvalPoint:
    """The series variables; y is present exactly for the Appell kinds."""

    x: complex
    y: complex | None = None


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy for one evaluation."""

    tol: float = 1e-12
    max_degree: int = 500
    consecutive_small: int = 3
    enforce_domain: bool = True

    def __post_init__(self):
        if not (0.0 < self.tol < 1.0):
            raise ValueError("tol must lie in (0, 1)")
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be at least 1")

    def with_tol(self, tol: float) -> "SeriesConfig":
        return replace(self, tol=tol)


DEFAULT_CONFIG = SeriesConfig()


@dataclass(eq=False)
class EvalReport:
    """Value plus convergence diagnostics of one series evaluation."""

    value: Matrix
    degrees_used: int
    last_increment_norm: float
    converged: bool


def check_domain(kind: FunctionKind, point: EvalPoint) -> bool:
    """Classical convergence region of the scalar counterpart, boundary excluded."""
    ax = abs(point.x)
    if kind is FunctionKind.GAUSS_2F1:
        return ax < 1.0
    if point.y is None:
        raise ValueError(f"{kind.value} needs a second variable")
    ay = abs(point.y)
    if kind in (FunctionKind.APPELL_F1, FunctionKind.APPELL_F3):
        return ax < 1.0 and ay < 1.0
    if kind is FunctionKind.APPELL_F2:
        return ax + ay < 1.0
    return math.sqrt(ax) + math.sqrt(ay) < 1.0


def _check_point(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> None:
    if params.kind.is_two_variable and point.y is None:
        raise ValueError(f"{params.kind.value} needs a second variable")
    if not params.kind.is_two_variable and point.y is not None:
        raise ValueError("2F1 takes a single variable")
    if cfg.enforce_domain and not check_domain(params.kind, point):
        raise DomainViolation(
            f"point ({point.x}, {point.y}) outside the {params.kind.value} region"
        )


def _sum_indexed(increment_at, order: int, cfg: SeriesConfig, label: str) -> EvalReport:
    """Accumulate degree increments under the consecutive-small stopping rule.

    Overflowing increments (possible when a series is pushed toward the edge
    of its region) fail immediately instead of spinning to max_degree.
    """
    total = linalg.zeros(order)
    small_run = 0
    last_norm = math.inf
    degrees = 0
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(cfg.max_degree + 1):
            increment = increment_at(n)
            total = total + increment
            degrees = n
            last_norm = linalg.frobenius_norm(increment)
            if not math.isfinite(last_norm):
                raise NotConverged(
                    f"{label} overflowed at degree {n}",
                    report=EvalReport(total, degrees, last_norm, False),
                )
            if last_norm <= cfg.tol * (1.0 + linalg.frobenius_norm(total)):
                small_run += 1
                if small_run >= cfg.consecutive_small:
                    return EvalReport(total, degrees, last_norm, True)
            else:
                small_run = 0
    report = EvalReport(total, degrees, last_norm, False)
    raise NotConverged(
        f"{label} still moving at degree {cfg.max_degree}", report=report
    )


def _sum_single(term_at, order: int, cfg: SeriesConfig) -> EvalReport:
    return _sum_indexed(term_at, order, cfg, "series")


def _sum_diagonals(diagonal_at, order: int, cfg: SeriesConfig) -> EvalReport:
    return _sum_indexed(diagonal_at, order, cfg, "double series")


class _PowerWeights:
    """Incrementally extended x^m / m! coefficients."""

    def __init__(self, x: complex):
        self.x = complex(x)
        self.values = [1.0 + 0.0j]

    def __getitem__(self, m: int) -> complex:
        while len(self.values) <= m:
            k = len(self.values)
            self.values.append(self.values[k - 1] * self.x / k)
        return self.values[m]


def _eval_gauss(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> EvalReport:
    a = PochhammerChain.for_products(params["A"])
    b = PochhammerChain.for_products(params["B"])
    c = PochhammerChain.for_inverses(params["C"])
    xs = _PowerWeights(point.x)

    def term(n: int) -> Matrix:
        return a.product(n) @ b.product(n) @ c.inverse(n) * xs[n]

    return _sum_single(term, params.order, cfg)


def _eval_f1(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> EvalReport:
    a = PochhammerChain.for_products(params["A"])
    b = PochhammerChain.for_products(params["B"])
    bp = PochhammerChain.for_products(params["Bp"])
    c = PochhammerChain.for_inverses(params["C"])
    xs, ys = _PowerWeights(point.x), _PowerWeights(point.y)

    def diagonal(total_degree: int) -> Matrix:
        block = linalg.zeros(params.order)
        for m in range(total_degree + 1):
            n = total_degree - m
            block = block + (
                a.product(total_degree)
                @ b.product(m)
                @ bp.product(n)
                @ c.inverse(total_degree)
            ) * (xs[m] * ys[n])
        return block

    return _sum_diagonals(diagonal, params.order, cfg)


def _eval_f2(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> EvalReport:
    a = PochhammerChain.for_products(params["A"])
    b = PochhammerChain.for_products(params["B"])
    bp = PochhammerChain.for_products(params["Bp"])
    c = PochhammerChain.for_inverses(params["C"])
    cp = PochhammerChain.for_inverses(params["Cp"])
    xs, ys = _PowerWeights(point.x), _PowerWeights(point.y)

    def diagonal(total_degree: int) -> Matrix:
        block = linalg.zeros(params.order)
        for m in range(total_degree + 1):
            n = total_degree - m
            block = block + (
                a.product(total_degree)
                @ b.product(m)
                @ bp.product(n)
                @ c.inverse(m)
                @ cp.inverse(n)
            ) * (xs[m] * ys[n])
        return block

    return _sum_diagonals(diagonal, params.order, cfg)


def _eval_f3(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> EvalReport:
    a = PochhammerChain.for_products(params["A"])
    ap = PochhammerChain.for_products(params["Ap"])
    b = PochhammerChain.for_products(params["B"])
    bp = PochhammerChain.for_products(params["Bp"])
    c = PochhammerChain.for_inverses(params["C"])
    xs, ys = _PowerWeights(point.x), _PowerWeights(point.y)

    def diagonal(total_degree: int) -> Matrix:
        block = linalg.zeros(params.order)
        for m in range(total_degree + 1):
            n = total_degree - m
            block = block + (
                a.product(m)
                @ ap.product(n)
                @ b.product(m)
                @ bp.product(n)
                @ c.inverse(total_degree)
            ) * (xs[m] * ys[n])
        return block

    return _sum_diagonals(diagonal, params.order, cfg)


def _eval_f4(params: ParameterSet, point: EvalPoint, cfg: SeriesConfig) -> EvalReport:
    a = PochhammerChain.for_products(params["A"])
    b = PochhammerChain.for_products(params["B"])
    c = PochhammerChain.for_inverses(params["C"])
    cp = PochhammerChain.for_inverses(params["Cp"])
    xs, ys = _PowerWeights(point.x), _PowerWeights(point.y)

    def diagonal(total_degree: int) -> Matrix:
        block = linalg.zeros(params.order)
        for m in range(total_degree + 1):
            n = total_degree - m
            block = block + (
                a.product(total_degree)
                @ b.product(total_degree)
                @ c.inverse(m)
                @ cp.inverse(n)
            ) * (xs[m] * ys[n])
        return block

    return _sum_diagonals(diagonal, params.order, cfg)


_EVALUATORS = {
    FunctionKind.GAUSS_2F1: _eval_gauss,
    FunctionKind.APPELL_F1: _eval_f1,
    FunctionKind.APPELL_F2: _eval_f2,
    FunctionKind.APPELL_F3: _eval_f3,
    FunctionKind.APPELL_F4: _eval_f4,
}


def evaluate(
    params: ParameterSet, point: EvalPoint, cfg: SeriesConfig = DEFAULT_CONFIG
) -> EvalReport:
    """Evaluate any supported kind at a point, honoring the domain guard."""
    _check_point(params, point, cfg)
    return _EVALUATORS[params.kind](params, point, cfg)


def gauss_2f1(params, point, cfg=DEFAULT_CONFIG) -> EvalReport:
    if params.kind is not FunctionKind.GAUSS_2F1:
        raise ValueError("parameter set is not for 2F1")
    return evaluate(params, point, cfg)


def appell_f1(params, point, cfg=DEFAULT_CONFIG) -> EvalReport:
    if params.kind is not FunctionKind.APPELL_F1:
        raise ValueError("parameter set is not for F1")
    return evaluate(params, point, cfg)


def appell_f2(params, point, cfg=DEFAULT_CONFIG) -> EvalReport:
    if params.kind is not FunctionKind.APPELL_F2:
        raise ValueError("parameter set is not for F2")
    return evaluate(params, point, cfg)


def appell_f3(params, point, cfg=DEFAULT_CONFIG) -> EvalReport:
    if params.kind is not FunctionKind.APPELL_F3:
        raise ValueError("parameter set is not for F3")
    return evaluate(params, point, cfg)


def appell_f4(params, point, cfg=DEFAULT_CONFIG) -> EvalReport:
    if params.kind is not FunctionKind.APPELL_F4:
        raise ValueError("parameter set is not for F4")
    return evaluate(params, point, cfg)
