"""Hermitian adjacency matrices, eigenvalues, energy, and closed forms.

The adjacency matrix of a gain graph has A[u, v] = gain(u, v) on edges and
zeros elsewhere; the gain inverse invariant makes it Hermitian, so its
spectrum is real.  Energy is the sum of absolute eigenvalues.

Tolerance ladder (each layer absorbs the noise of the one below):
    1e-12  Hermitian/construction checks
    1e-8   eigenpair residuals, characteristic-polynomial realness
    1e-7   Kronecker spectrum multiset matching and energy doubling
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gains import GainGraph, all_ones, gain_graph, kronecker, unit
from .graphs import Graph, cycle_graph

HERMITIAN_TOL = 1e-12
RESIDUAL_TOL = 1e-8
KRONECKER_TOL = 1e-7
CHAR_POLY_MAX_N = 12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues sorted descending, and their absolute sum."""

    eigenvalues: np.ndarray
    energy: float


def adjacency(phi: GainGraph) -> np.ndarray:
    """Hermitian adjacency matrix of a gain graph (complex, dense)."""
    n = phi.graph.n
    a = np.zeros((n, n), dtype=complex)
    for (u, v), z in phi.forward.items():
        a[u, v] = z
        a[v, u] = z.conjugate()
    return a


def _require_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")


def eigenvalues(a: np.ndarray) -> Spectrum:
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Backed by the LAPACK Hermitian solver; every solve is verified against
    the residual contract ||A v - lambda v|| <= 1e-8 * ||A||_2 per pair.
    """
    a = np.asarray(a, dtype=complex)
    _require_hermitian(a)
    if a.shape[0] == 0:
        return Spectrum(np.empty(0), 0.0)
    vals, vecs = np.linalg.eigh(a)
    scale = float(np.max(np.abs(vals)))
    if scale > 0.0:
        residuals = np.linalg.norm(a @ vecs - vecs * vals, axis=0)
        if np.max(residuals) > RESIDUAL_TOL * scale:
            raise RuntimeError(
                f"eigensolver residual {np.max(residuals):.3e} exceeds "
                f"{RESIDUAL_TOL:.0e} * ||A||"
            )
    descending = vals[::-1].copy()
    return Spectrum(descending, float(np.sum(np.abs(descending))))


def spectrum(phi: GainGraph) -> Spectrum:
    """Spectrum of a gain graph, with zero-trace and Frobenius sanity checks.

    For a gain graph the eigenvalues must sum to 0 (zero diagonal) and their
    squares must sum to 2m (unit-modulus off-diagonal entries); both are
    asserted after every solve.
    """
    spec = eigenvalues(adjacency(phi))
    n, m = phi.graph.n, phi.graph.m
    if n == 0:
        return spec
    if abs(float(np.sum(spec.eigenvalues))) > 1e-8 * n:
        raise RuntimeError("spectrum sanity: eigenvalue sum is not ~0")
    if abs(float(np.sum(spec.eigenvalues**2)) - 2.0 * m) > 1e-7 * n:
        raise RuntimeError("spectrum sanity: sum of squares is not ~2m")
    return spec


def energy(phi: GainGraph) -> float:
    """Sum of the absolute eigenvalues of the adjacency matrix."""
    return spectrum(phi).energy


def char_poly(a: np.ndarray) -> np.ndarray:
    """Coefficients of det(lambda I - A), leading coefficient first.

    Computed by the Faddeev-LeVerrier recurrence, independently of the
    eigensolver; for Hermitian input the coefficients are real (checked to
    1e-8).  Intended for desk-scale verification, so n <= 12.
    """
    a = np.asarray(a, dtype=complex)
    _require_hermitian(a)
    n = a.shape[0]
    if n > CHAR_POLY_MAX_N:
        raise ValueError(f"char_poly supports n <= {CHAR_POLY_MAX_N}, got {n}")
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[k - 1] * np.eye(n)
        coeffs[k] = -np.trace(a @ m) / k
    if n and np.max(np.abs(coeffs.imag)) > 1e-8:
        raise RuntimeError("characteristic polynomial is not real within 1e-8")
    return coeffs.real


def four_cycle_gain_graph(a: complex, b: complex) -> GainGraph:
    """The 4-cycle 0-1-2-3-0 with gains gain(0,1)=1, gain(1,2)=a,
    gain(2,3)=1, gain(3,0)=b."""
    a, b = unit(a), unit(b)
    return gain_graph(
        cycle_graph(4),
        {(0, 1): 1.0, (1, 2): a, (2, 3): 1.0, (0, 3): b.conjugate()},
    )


def four_cycle_energy(a: complex, b: complex) -> float:
    """Closed-form energy of the 4-cycle above, as a function of x = Re(a*b):

        2*sqrt(2 + sqrt(2 + 2x)) + 2*sqrt(2 - sqrt(2 + 2x))

    which is >= 4 with equality exactly at x = 1.  x is clamped to [-1, 1]
    to guard the inner square root against rounding overshoot.
    """
    a, b = unit(a), unit(b)
    x = min(1.0, max(-1.0, (a * b).real))
    s = np.sqrt(2.0 + 2.0 * x)
    return float(2.0 * np.sqrt(2.0 + s) + 2.0 * np.sqrt(max(0.0, 2.0 - s)))


@dataclass(frozen=True, eq=False)
class KroneckerCheck:
    """Comparison of product spectra against the factor eigenvalue products."""

    product_order: int
    spectrum_deviation: float       # max multiset gap, sorted elementwise
    spectrum_ok: bool
    double_energy: float | None     # only when the second factor is K2
    expected_double_energy: float | None
    doubling_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.spectrum_ok and self.doubling_ok is not False


KRONECKER_MAX_ORDER = 64


def kronecker_spectrum_check(phi: GainGraph, h: Graph) -> KroneckerCheck:
    """Verify that the product spectrum is the set of pairwise eigenvalue
    products {eta_s * lambda_t}, and for a single-edge second factor that the
    energy doubles."""
    order = phi.graph.n * h.n
    if order > KRONECKER_MAX_ORDER:
        raise ValueError(
            f"product order {order} exceeds the limit {KRONECKER_MAX_ORDER}"
        )
    eta = spectrum(phi).eigenvalues
    lam = spectrum(all_ones(h)).eigenvalues
    expected = np.sort(np.outer(eta, lam).ravel())
    product = kronecker(phi, h)
    actual_spec = spectrum(product)
    actual = np.sort(actual_spec.eigenvalues)
    deviation = float(np.max(np.abs(expected - actual), initial=0.0))

    double_energy = expected_double = doubling_ok = None
    if h.n == 2 and h.m == 1:
        double_energy = actual_spec.energy
        expected_double = 2.0 * float(np.sum(np.abs(eta)))
        doubling_ok = abs(double_energy - expected_double) <= KRONECKER_TOL

    return KroneckerCheck(
        product_order=order,
        spectrum_deviation=deviation,
        spectrum_ok=deviation <= KRONECKER_TOL,
        double_energy=double_energy,
        expected_double_energy=expected_double,
        doubling_ok=doubling_ok,
    )
