"""Dense complex linear algebra over computational-basis-indexed spaces.

Values are plain numpy arrays with dtype complex128; every function here is
pure and never mutates its inputs, so the module is safe to use from
concurrent threads.

Conventions, fixed once and used everywhere:

* ``omega(d) = exp(+2j*pi/d)`` is the primitive d-th root of unity.
* Composite indices flatten with the left tensor factor most significant:
  ``|i> (x) |j>`` of dimensions (d1, d2) lives at flat index ``i*d2 + j``.
* Random draws use numpy's PCG64 (``numpy.random.default_rng``), so any
  transcript is reproducible from its seed.
"""

from __future__ import annotations

import numpy as np

ATOL_ALGEBRA = 1e-12
"""Tolerance for algebraic identities (unitarity, orthogonality, traces)."""

ATOL_STATE = 1e-10
"""Tolerance for protocol-level state comparisons and state norms."""


class DimensionMismatchError(ValueError):
    """Operand shapes do not conform."""


def omega(d: int) -> complex:
    """Primitive d-th root of unity, exp(2*pi*i/d)."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return complex(np.exp(2j * np.pi / d))


def omega_pow(d: int, exponents) -> np.ndarray:
    """Elementwise omega(d)**t; exponents are reduced mod d before use."""
    t = np.mod(np.asarray(exponents), d)
    return np.exp(2j * np.pi * t / d)


def basis_ket(d: int, index: int) -> np.ndarray:
    """Computational-basis state |index> in C^d."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not 0 <= index < d:
        raise ValueError(f"basis index {index} out of range for dimension {d}")
    ket = np.zeros(d, dtype=complex)
    ket[index] = 1.0
    return ket


def identity(d: int) -> np.ndarray:
    """Identity operator on C^d."""
    return np.eye(d, dtype=complex)


def tensor_vec(u, v) -> np.ndarray:
    """Tensor product of two vectors, left factor most significant."""
    return np.kron(np.asarray(u, dtype=complex), np.asarray(v, dtype=complex))


def tensor_mat(a, b) -> np.ndarray:
    """Kronecker product of two operators; (A (x) B)(u (x) v) = Au (x) Bv."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(
            f"cannot multiply shapes {a.shape} and {b.shape}"
        )
    return a @ b


def apply(m, v) -> np.ndarray:
    """Matrix-vector action m @ v with an explicit shape check."""
    m = np.asarray(m, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if m.ndim != 2 or v.ndim != 1 or m.shape[1] != v.shape[0]:
        raise DimensionMismatchError(
            f"cannot apply shape {m.shape} to vector of length {v.shape}"
        )
    return m @ v


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m, dtype=complex).conj().T


def trace(m) -> complex:
    """Sum of the diagonal of a square matrix."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"trace needs a square matrix, got {m.shape}")
    return complex(np.trace(m))


def inner(u, v) -> complex:
    """Hermitian inner product sum_i conj(u_i) * v_i."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def fidelity(u, v) -> float:
    """Squared magnitude of the inner product; 1 means equal up to phase."""
    return abs(inner(u, v)) ** 2


def norm(v) -> float:
    """Euclidean norm."""
    return float(np.linalg.norm(np.asarray(v, dtype=complex)))


def check_state(psi, d: int | None = None) -> np.ndarray:
    """Validate a unit-norm amplitude vector and return it as complex128."""
    v = np.asarray(psi, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatchError("state must be a 1-d amplitude vector")
    if d is not None and v.size != d:
        raise DimensionMismatchError(f"expected dimension {d}, got {v.size}")
    n = np.linalg.norm(v)
    if abs(n - 1.0) > ATOL_STATE:
        raise ValueError(f"state norm is {n!r}, not 1 within {ATOL_STATE}")
    return v


def random_state(d: int, seed: int) -> np.ndarray:
    """Seeded Haar-like random state: normal real/imag parts, normalized."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    parts = rng.standard_normal((d, 2))
    amps = parts[:, 0] + 1j * parts[:, 1]
    return amps / np.linalg.norm(amps)


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Seeded random unitary: QR orthonormalization of a normal matrix."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(m)
    # Fix the column phases so the result is unique for a given seed.
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


# JSON wire format shared by the CLI and the other modules.
# Vector: {"dim": D, "amps": [[re, im], ...]}
# Matrix: {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.


def _pairs(values) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def _from_pairs(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


def vector_to_json(v) -> dict:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatchError("vector encoding needs a 1-d array")
    return {"dim": int(v.size), "amps": _pairs(v)}


def vector_from_json(obj: dict) -> np.ndarray:
    amps = _from_pairs(obj["amps"])
    if amps.size != int(obj["dim"]):
        raise ValueError(f"vector declares dim {obj['dim']} but has {amps.size} amps")
    return amps


def matrix_to_json(m) -> dict:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatchError("matrix encoding needs a 2-d array")
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": _pairs(m.reshape(-1)),
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = _from_pairs(obj["entries"])
    if entries.size != rows * cols:
        raise ValueError(
            f"matrix declares {rows}x{cols} but has {entries.size} entries"
        )
    return entries.reshape(rows, cols)
