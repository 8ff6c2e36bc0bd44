"""Dense complex matrix arithmetic at desk scale.

Matrices are square numpy arrays of complex128, treated as immutable values.
Everything downstream (Pochhammer chains, series evaluation, identity
verification) consumes this module and nothing else for linear algebra.
Products are never reordered: ``matmul(a, b)`` is a*b, full stop.

Factorizations are LU with partial pivoting; singularity is reported via the
minimum pivot magnitude rather than by raising, so callers decide. The matrix
exponential uses scaling and squaring around a truncated Taylor core, and
eigenvalues come from a Hessenberg reduction followed by a shifted QR
iteration with deflation, which is plenty for orders up to 8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonConvergent, SingularMatrix

Matrix = np.ndarray

#: Relative pivot threshold below which a matrix is treated as singular.
SINGULARITY_RTOL = 1e-12

_SUBDIAG_EPS = 1e-14
_EXP_NORM_LIMIT = 600.0


def as_matrix(entries) -> Matrix:
    """Validate and copy ``entries`` into a square complex128 array."""
    m = np.array(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise DimensionMismatch("matrix order must be at least 1")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(order: int) -> Matrix:
    return np.eye(order, dtype=complex)


def zeros(order: int) -> Matrix:
    return np.zeros((order, order), dtype=complex)


def frobenius_norm(m: Matrix) -> float:
    return float(np.linalg.norm(m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a*b in that order."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"orders differ: {a.shape} vs {b.shape}")
    return a @ b


def commutator_norm(a: Matrix, b: Matrix) -> float:
    """Frobenius norm of a*b - b*a, the commutation defect."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"orders differ: {a.shape} vs {b.shape}")
    return frobenius_norm(a @ b - b @ a)


@dataclass(frozen=True, eq=False)
class LuFactorization:
    """Packed LU factors with partial pivoting.

    ``lu`` holds U on and above the diagonal and the unit-lower-triangular
    multipliers strictly below it. ``pivots[i]`` is the source row placed at
    position i, so lu reconstructs m[pivots]. ``min_pivot_magnitude`` is the
    smallest |U[k,k]| seen, the singularity signal. ``source_norm`` is the
    Frobenius norm of the factored matrix, kept for scale-aware thresholds.
    """

    lu: Matrix
    pivots: np.ndarray
    min_pivot_magnitude: float
    source_norm: float

    @property
    def order(self) -> int:
        return self.lu.shape[0]

    def is_invertible(self) -> bool:
        threshold = SINGULARITY_RTOL * max(1.0, self.source_norm)
        return self.min_pivot_magnitude >= threshold


def lu_factor(m: Matrix) -> LuFactorization:
    """Partial-pivoting LU. Never raises; inspect min_pivot_magnitude."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    pivots = np.arange(n)
    min_pivot = math.inf
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if p != k:
            a[[k, p]] = a[[p, k]]
            pivots[[k, p]] = pivots[[p, k]]
        pivot = a[k, k]
        min_pivot = min(min_pivot, abs(pivot))
        if pivot != 0 and k + 1 < n:
            a[k + 1:, k] /= pivot
            a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
    return LuFactorization(a, pivots, float(min_pivot), frobenius_norm(m))


def is_invertible(m: Matrix | LuFactorization) -> bool:
    if isinstance(m, LuFactorization):
        return m.is_invertible()
    return lu_factor(m).is_invertible()


def solve(f: LuFactorization, rhs: Matrix) -> Matrix:
    """Solve M*X = rhs given f = lu_factor(M)."""
    if rhs.shape[0] != f.order:
        raise DimensionMismatch(f"rhs has {rhs.shape[0]} rows, expected {f.order}")
    if not f.is_invertible():
        raise SingularMatrix(
            f"matrix is singular to working precision "
            f"(min pivot {f.min_pivot_magnitude:.3e})"
        )
    lu = f.lu
    n = f.order
    x = np.array(rhs[f.pivots], dtype=complex)
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= lu[i, i + 1:] @ x[i + 1:]
        x[i] /= lu[i, i]
    return x


def inverse(m: Matrix) -> Matrix:
    """M^-1 via LU solve against the identity."""
    return solve(lu_factor(m), identity(m.shape[0]))


def mat_exp(m: Matrix) -> Matrix:
    """exp(m) by scaling and squaring with a truncated Taylor core.

    The argument is scaled so its Frobenius norm is at most 1/2, the Taylor
    series is summed to machine-precision stagnation, and the result is
    squared back up. Extreme norms that overflow double precision raise
    NonConvergent.
    """
    a = as_matrix(m)
    norm = frobenius_norm(a)
    if norm > _EXP_NORM_LIMIT:
        raise NonConvergent(f"matrix exponential overflow, norm {norm:.3e}")
    squarings = 0
    if norm > 0.5:
        squarings = max(0, int(math.ceil(math.log2(norm / 0.5))))
        a = a / (2.0 ** squarings)
    n = a.shape[0]
    result = identity(n)
    term = identity(n)
    converged = False
    for j in range(1, 40):
        term = term @ a / j
        result = result + term
        if frobenius_norm(term) <= 1e-17 * (1.0 + frobenius_norm(result)):
            converged = True
            break
    if not converged:
        raise NonConvergent("Taylor core of the matrix exponential stagnated")
    for _ in range(squarings):
        result = result @ result
    if not np.all(np.isfinite(result.real)) or not np.all(np.isfinite(result.imag)):
        raise NonConvergent("matrix exponential overflowed during squaring")
    return result


def _hessenberg(a: Matrix) -> Matrix:
    """Unitary similarity reduction to upper Hessenberg form (Householder)."""
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        nx = float(np.linalg.norm(x))
        if nx <= 1e-300:
            continue
        v = x.copy()
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v[0] += phase * nx
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
    return h


def _eig2x2(block: Matrix) -> tuple[complex, complex]:
    p, q = block[0, 0], block[0, 1]
    u, v = block[1, 0], block[1, 1]
    tr = p + v
    det = p * v - q * u
    disc = np.sqrt(complex(tr * tr - 4.0 * det))
    return complex((tr + disc) / 2.0), complex((tr - disc) / 2.0)


def _wilkinson_shift(block: Matrix) -> complex:
    lam1, lam2 = _eig2x2(block)
    corner = block[1, 1]
    return lam1 if abs(lam1 - corner) <= abs(lam2 - corner) else lam2


def _qr_step(h: Matrix, shift: complex) -> None:
    """One shifted QR sweep on the Hessenberg block ``h``, in place."""
    n = h.shape[0]
    for i in range(n):
        h[i, i] -= shift
    rotations = []
    for i in range(n - 1):
        a, b = h[i, i], h[i + 1, i]
        r = math.hypot(abs(a), abs(b))
        if r == 0.0:
            c, s = 1.0 + 0.0j, 0.0 + 0.0j
        else:
            c, s = a / r, b / r
        rotations.append((c, s))
        top = np.conj(c) * h[i, i:] + np.conj(s) * h[i + 1, i:]
        bot = -s * h[i, i:] + c * h[i + 1, i:]
        h[i, i:] = top
        h[i + 1, i:] = bot
    for i, (c, s) in enumerate(rotations):
        left = c * h[: i + 2, i] + s * h[: i + 2, i + 1]
        right = -np.conj(s) * h[: i + 2, i] + np.conj(c) * h[: i + 2, i + 1]
        h[: i + 2, i] = left
        h[: i + 2, i + 1] = right
    for i in range(n):
        h[i, i] += shift


def spectrum(m: Matrix, max_iterations: int | None = None) -> list[complex]:
    """Eigenvalues of a small dense complex matrix.

    Hessenberg reduction followed by Wilkinson-shifted QR with deflation;
    trailing 2x2 blocks are solved in closed form. Intended for order <= 8.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if n > 8:
        raise ValueError(f"spectrum supports order <= 8, got {n}")
    if n == 1:
        return [complex(a[0, 0])]
    h = _hessenberg(a)
    cap = max_iterations if max_iterations is not None else 200 * n
    eigenvalues: list[complex] = []
    hi = n
    iterations = 0
    while hi > 0:
        for i in range(1, hi):
            if abs(h[i, i - 1]) <= _SUBDIAG_EPS * (
                abs(h[i - 1, i - 1]) + abs(h[i, i]) + 1e-300
            ):
                h[i, i - 1] = 0.0
        if hi == 1:
            eigenvalues.append(complex(h[0, 0]))
            hi = 0
            continue
        if h[hi - 1, hi - 2] == 0.0:
            eigenvalues.append(complex(h[hi - 1, hi - 1]))
            hi -= 1
            continue
        lo = hi - 1
        while lo > 0 and h[lo, lo - 1] != 0.0:
            lo -= 1
        if hi - lo == 2:
            lam1, lam2 = _eig2x2(h[lo:hi, lo:hi])
            eigenvalues.extend([lam1, lam2])
            hi = lo
            continue
        iterations += 1
        if iterations > cap:
            raise NonConvergent(f"QR iteration exceeded {cap} sweeps")
        shift = _wilkinson_shift(h[hi - 2:hi, hi - 2:hi])
        if iterations % 16 == 0:
            # exceptional shift to break rare symmetric stalls
            shift = shift + 0.5 * abs(h[hi - 1, hi - 2])
        _qr_step(h[lo:hi, lo:hi], shift)
    return eigenvalues


def is_positive_stable(m: Matrix) -> bool:
    """True when every eigenvalue has strictly positive real part."""
    return min(z.real for z in spectrum(m)) > 0.0
