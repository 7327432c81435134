"""Numerical cross-checks on the 2-torus.

Trigonometric polynomials are sampled on the uniform ``N x N`` grid and
recovered with the discrete Fourier transform.  The deformed product is
realized independently as a twisted convolution of Fourier coefficient
arrays, and the oscillatory integral behind the Rieffel product is
evaluated by brute-force Gaussian-regularized quadrature.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedMapError
from .graded import Bidegree, Element, GeneratorTable, torus_table
from .rieffel import JMap, rieffel_phase
from .phase import as_fraction

__all__ = [
    "GridFunction",
    "QuadratureSpec",
    "synthesize",
    "analyze",
    "grid_rieffel_product",
    "regularized_oscillatory_phase",
    "convergence_study",
]


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples ``samples[j, k]`` of a function at ``(j/N, k/N)``."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        if s.ndim != 2 or s.shape[0] != s.shape[1] or s.shape[0] % 2 or s.shape[0] == 0:
            raise DomainError(f"grid must be N x N with N even and positive, got shape {s.shape}")
        object.__setattr__(self, "samples", s)

    @property
    def size(self) -> int:
        return self.samples.shape[0]

    def _check(self, other: GridFunction) -> None:
        if other.size != self.size:
            raise DomainError(f"grid size mismatch: {self.size} vs {other.size}")

    def __mul__(self, other: GridFunction) -> GridFunction:
        self._check(other)
        return GridFunction(self.samples * other.samples)

    def __sub__(self, other: GridFunction) -> GridFunction:
        self._check(other)
        return GridFunction(self.samples - other.samples)

    def max_abs(self) -> float:
        return float(np.abs(self.samples).max())

    def to_json(self) -> list:
        return [[[z.real, z.imag] for z in row] for row in self.samples.tolist()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, rows) -> GridFunction:
        if isinstance(rows, str):
            rows = json.loads(rows)
        a = np.asarray(rows, dtype=float)
        return cls(a[..., 0] + 1j * a[..., 1])


def _fold(idx: np.ndarray, N: int) -> np.ndarray:
    # DFT index -> signed frequency in (-N/2, N/2]
    return np.where(idx > N // 2, idx - N, idx)


def _coefficients(e: Element, N: int, limit: int) -> np.ndarray:
    """Fourier coefficient array indexed by frequency mod N."""
    C = np.zeros((N, N), dtype=complex)
    for k, c in e.items():
        n1, n2 = e.table.degree_of(k)
        if abs(n1) >= limit or abs(n2) >= limit:
            raise DomainError(f"degree {(n1, n2)} exceeds band limit {limit} for N={N}")
        C[n1 % N, n2 % N] += complex(c)
    return C


def synthesize(e: Element, N: int) -> GridFunction:
    """Evaluate a trigonometric polynomial on the grid.

    A monomial of degree ``(n1, n2)`` is the character
    ``exp(2*pi*i*(n1*phi1 + n2*phi2))``.
    """
    if N <= 0 or N % 2:
        raise DomainError("grid size must be a positive even integer")
    C = _coefficients(e, N, N // 2)
    return GridFunction(np.fft.ifft2(C) * N * N)


def analyze(g: GridFunction, table: GeneratorTable | None = None) -> Element:
    """Inverse of :func:`synthesize` for band-limited elements.

    The result is expressed as ``U**n1 V**n2`` in a table whose first two
    invertible generators have degrees (1,0) and (0,1).
    """
    table = table or torus_table()
    u = _unit_slot(table, Bidegree(1, 0))
    v = _unit_slot(table, Bidegree(0, 1))
    N = g.size
    C = np.fft.fft2(g.samples) / (N * N)
    f = _fold(np.arange(N), N)
    terms = {}
    for j, k in zip(*np.nonzero(np.abs(C) >= 1e-12)):
        exps = [0] * len(table)
        exps[u] += int(f[j])
        exps[v] += int(f[k])
        terms[tuple(exps)] = complex(C[j, k])
    return Element._raw(table, terms)


def _unit_slot(table: GeneratorTable, d: Bidegree) -> int:
    for i, (name, deg, inv) in enumerate(zip(table.slots, table.slot_degrees, table.slot_invertible)):
        if deg == d and inv and not name.endswith("*"):
            return i
    raise DomainError(f"table has no invertible generator of degree {tuple(d)}")


def grid_rieffel_product(ga: GridFunction, gb: GridFunction, J: JMap) -> GridFunction:
    """Deformed product computed as a twisted convolution of Fourier coefficients.

    Inputs must be band-limited to ``|n_i| < N/4`` so that the product
    stays below the Nyquist frequency.
    """
    ga._check(gb)
    N = ga.size
    A = np.fft.fft2(ga.samples) / (N * N)
    B = np.fft.fft2(gb.samples) / (N * N)
    f = _fold(np.arange(N), N)
    band = np.abs(f) < N // 4
    mask = np.outer(band, band)
    for X in (A, B):
        if np.any(np.abs(X[~mask]) >= 1e-9):
            raise DomainError(f"input not band-limited to |n| < {N // 4}")
    A[~mask] = 0
    B[~mask] = 0
    m1, m2 = np.meshgrid(f, f, indexing="ij")
    if J.exact:
        # integer pairing reduced mod the common denominator keeps phases exact to rounding
        D = math.lcm(*(x.denominator for x in J.entries))
        G = [[int(J.j11 * D), int(J.j12 * D)], [int(J.j21 * D), int(J.j22 * D)]]
    else:
        D = None
        G = [[float(J.j11), float(J.j12)], [float(J.j21), float(J.j22)]]
    C = np.zeros((N, N), dtype=complex)
    for j, k in zip(*np.nonzero(A)):
        n1, n2 = int(f[j]), int(f[k])
        # q = n^T J m over all frequencies m of b
        q = (n1 * G[0][0] + n2 * G[1][0]) * m1 + (n1 * G[0][1] + n2 * G[1][1]) * m2
        phase = np.exp(2j * np.pi * (np.mod(q, D) / D)) if D else np.exp(2j * np.pi * q)
        C += np.roll(A[j, k] * B * phase, (n1, n2), axis=(0, 1))
    return GridFunction(np.fft.ifft2(C) * N * N)


@dataclass(frozen=True)
class QuadratureSpec:
    """Gaussian regulator ``exp(-pi*epsilon*(x^2 + y^2))`` on ``[-R, R]^2`` with step ``h``."""

    epsilon: float
    halfwidth: float
    step: float

    def __post_init__(self):
        if not self.epsilon > 0 or not self.halfwidth > 0 or not self.step > 0:
            raise DomainError("epsilon, halfwidth and step must be positive")
        if self.step >= 1:
            raise DomainError("quadrature step must be below 1")

    @classmethod
    def default(cls, epsilon: float, theta: float = 0.0, max_degree: int = 0) -> QuadratureSpec:
        R = 10.0 * max(1.0, abs(float(theta)) * max_degree)
        # keep the aliases of the x-sum (period 1/h) outside the y-box
        h = min(0.05, 1.0 / (R + max_degree + 1))
        return cls(float(epsilon), R, h)


def _oscillatory_2d(alpha: float, beta: float, q: QuadratureSpec) -> complex:
    """Regularized ``int int exp(2 pi i (alpha y + beta x - x y)) dx dy``.

    The exact limit is ``exp(2 pi i alpha beta)``.
    """
    n = int(round(q.halfwidth / q.step))
    x = np.linspace(-q.halfwidth, q.halfwidth, 2 * n + 1)
    w = np.full(x.size, q.step)
    w[0] = w[-1] = q.step / 2
    g = w * np.exp(-np.pi * q.epsilon * x * x)
    fx = g * np.exp(2j * np.pi * beta * x)
    fy = g * np.exp(2j * np.pi * alpha * x)
    total = 0j
    chunk = max(1, 4_000_000 // x.size)
    for s in range(0, x.size, chunk):
        ys = x[s : s + chunk]
        inner = np.exp(-2j * np.pi * np.outer(ys, x)) @ fx
        total += fy[s : s + chunk] @ inner
    return complex(total)


def regularized_oscillatory_phase(da, db, theta, q: QuadratureSpec) -> complex:
    """Quadrature oracle for the Rieffel phase under ``J e1 = 0, J e2 = theta p1``.

    The integrand factorizes into the (x1, y1) integral, which carries only
    the first weight of ``b``, and the (x2, y2) integral, which carries
    ``theta * n1(a)`` against ``n2(b)``.  ``theta`` may be a :class:`JMap`
    of that form.
    """
    if isinstance(theta, JMap):
        if not theta.is_theta_form():
            raise UnsupportedMapError("quadrature supports only J with J e1 = 0, J e2 = theta p1")
        theta = theta.j12
    f = as_fraction(theta)
    theta = float(f if f is not None else theta)
    a1, _ = da
    b1, b2 = db
    first = _oscillatory_2d(0.0, float(b1), q)
    second = _oscillatory_2d(theta * a1, float(b2), q)
    return first * second


@dataclass
class ConvergenceRow:
    epsilon: float
    value: complex
    error: float


def convergence_study(da, db, theta, epsilons=(1e-2, 1e-3, 1e-4), spec: QuadratureSpec | None = None):
    """Quadrature error against the closed-form phase for a sequence of regulators.

    Without ``spec`` the default box and step for each epsilon are used.
    Returns ``(rows, closed_form)``.
    """
    da, db = Bidegree(*da), Bidegree(*db)
    exact = complex(rieffel_phase(da, db, JMap.theta_map(theta)))
    maxdeg = max(map(abs, (*da, *db)))
    rows = []
    for eps in epsilons:
        q = (
            QuadratureSpec(eps, spec.halfwidth, spec.step)
            if spec is not None
            else QuadratureSpec.default(eps, float(theta), maxdeg)
        )
        val = regularized_oscillatory_phase(da, db, theta, q)
        rows.append(ConvergenceRow(eps, val, abs(val - exact)))
    return rows, exact


def is_monotone(rows) -> bool:
    errs = [r.error for r in rows]
    return all(b < a for a, b in zip(errs, errs[1:]))

