"""Generalized Pauli operators on C^d and the operator basis they span.

The two generators act on computational-basis kets as

    X_l |m> = |m + l mod d>          (cyclic shift)
    Z_k |m> = omega^{m k} |m>        (phase, omega = exp(2*pi*i/d))

Their products E_{l,k} = X_l Z_k form d^2 unitaries that are pairwise
trace-orthogonal, trace(E_{l,k}^dag E_{l',k'}) = d * delta, and therefore a
basis of the full d x d matrix algebra.  ``decompose``/``reconstruct``
convert between a matrix and its d^2 coefficients in this basis.

Coefficient arrays are (d, d) with [l, k] indexing; flattened row-major the
entry for (l, k) sits at l*d + k, which is also the JSON listing order.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .linalg import DimensionMismatchError, omega_pow


class PauliIndex(NamedTuple):
    """Label (l, k) of the operator X_l Z_k; the dimension travels separately."""

    l: int
    k: int


def _check_exponent(d: int, value: int, what: str) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not 0 <= value < d:
        raise ValueError(f"{what} {value} out of range for dimension {d}")


def shift_op(d: int, l: int) -> np.ndarray:
    """Cyclic shift X_l: column m has its single 1 at row (m + l) mod d."""
    _check_exponent(d, l, "shift exponent")
    m = np.zeros((d, d), dtype=complex)
    cols = np.arange(d)
    m[(cols + l) % d, cols] = 1.0
    return m


def phase_op(d: int, k: int) -> np.ndarray:
    """Diagonal phase Z_k with entries omega^{m k} at row m."""
    _check_exponent(d, k, "phase exponent")
    return np.diag(omega_pow(d, np.arange(d) * k))


def pauli_op(d: int, l: int, k: int) -> np.ndarray:
    """E_{l,k} = X_l Z_k, i.e. entries omega^{m k} at ((m + l) mod d, m)."""
    _check_exponent(d, l, "shift exponent")
    _check_exponent(d, k, "phase exponent")
    m = np.zeros((d, d), dtype=complex)
    cols = np.arange(d)
    m[(cols + l) % d, cols] = omega_pow(d, cols * k)
    return m


def pauli_basis(d: int) -> np.ndarray:
    """All d^2 basis operators, indexed as basis[l, k] = pauli_op(d, l, k)."""
    basis = np.empty((d, d, d, d), dtype=complex)
    for l in range(d):
        for k in range(d):
            basis[l, k] = pauli_op(d, l, k)
    return basis


def pauli_inverse(d: int, l: int, k: int) -> tuple[int, int]:
    """Exponents (zk, xl) with Z_zk X_xl undoing X_l Z_k.

    Returns ((-k) mod d, (-l) mod d); the product
    phase_op(d, zk) @ shift_op(d, xl) @ pauli_op(d, l, k) is the identity.
    """
    _check_exponent(d, l, "shift exponent")
    _check_exponent(d, k, "phase exponent")
    return (-k) % d, (-l) % d


def decompose(a) -> np.ndarray:
    """Coefficients xi[l, k] = (1/d) trace(E_{l,k}^dag A) of a d x d matrix.

    Along each shifted diagonal the trace reduces to a discrete Fourier
    transform: xi[l, k] = (1/d) sum_m omega^{-k m} A[(m + l) mod d, m].
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatchError(f"decompose needs a square matrix, got {a.shape}")
    d = a.shape[0]
    cols = np.arange(d)
    coeffs = np.empty((d, d), dtype=complex)
    for l in range(d):
        coeffs[l] = np.fft.fft(a[(cols + l) % d, cols]) / d
    return coeffs


def reconstruct(coeffs) -> np.ndarray:
    """Sum xi[l, k] * E_{l,k} over all labels; inverse of ``decompose``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.ndim != 2 or coeffs.shape[0] != coeffs.shape[1]:
        raise DimensionMismatchError(
            f"reconstruct needs a (d, d) coefficient array, got {coeffs.shape}"
        )
    d = coeffs.shape[0]
    return np.einsum("lk,lkrc->rc", coeffs, pauli_basis(d))


def coeffs_to_json(coeffs) -> dict:
    """Encode coefficients as {"d", "coeffs": [{"i","j","re","im"}, ...]}."""
    coeffs = np.asarray(coeffs, dtype=complex)
    d = coeffs.shape[0]
    listing = [
        {"i": i, "j": j, "re": float(coeffs[i, j].real), "im": float(coeffs[i, j].imag)}
        for i in range(d)
        for j in range(d)
    ]
    return {"d": d, "coeffs": listing}


def coeffs_from_json(obj: dict) -> np.ndarray:
    d = int(obj["d"])
    out = np.zeros((d, d), dtype=complex)
    seen = 0
    for item in obj["coeffs"]:
        out[int(item["i"]), int(item["j"])] = complex(item["re"], item["im"])
        seen += 1
    if seen != d * d:
        raise ValueError(f"expected {d * d} coefficients, got {seen}")
    return out
