"""System-environment error channel driven by a d x d coupling table.

A single qudit couples to a d^2-dimensional environment with orthonormal
basis kets e_{a,b}, (a, b) in Z_d x Z_d.  The coupling table gamma[a, b]
defines an isometry on basis kets,

    |i> (x) |E>  ->  sum_l gamma[a, b] |i + l>, with a = (l - i) mod d
                                                and b = (-i) mod d,

extended to arbitrary states by linearity (``evolve_joint``).  Column
normalization sum_a |gamma[a, b]|^2 = 1 is exactly the condition for this
map to preserve norm, so tables failing it are rejected, never renormalized.

Re-summing the joint state over Fourier phases rewrites it as

    sum_{l,k} (X_l Z_k psi) (x) v[l, k],
    v[l, k] = (1/d) sum_z omega^{z k} gamma[(z+l) mod d, z] e_{(z+l) mod d, z},

so the channel acts like a random generalized Pauli error X_l Z_k whose
weight is the squared norm of v[l, k] (``env_vectors``, ``induced_weights``).
Two measurement semantics are exposed: ``measure_environment_raw`` projects
onto the e_{a,b} basis literally, while ``sample_error`` draws a Pauli label
from the induced weights.  The two diagnoses coincide exactly when the
v[l, k] are orthogonal, i.e. when |gamma[(z+l) mod d, z]| is constant in z
for each l.

Joint states are flat vectors of length d^3 ordered (system, a, b), i.e.
flat index s*d^2 + a*d + b.
"""

from __future__ import annotations

import numpy as np

from .linalg import check_state, omega_pow
from .weyl import PauliIndex, pauli_inverse, pauli_op, phase_op, shift_op

GAMMA_ATOL = 1e-10
"""Tolerance for the per-column normalization of a coupling table."""


class GammaValidationError(ValueError):
    """Coupling table violates the unitarity-derived column normalization."""


def validate_gamma(gamma) -> str | None:
    """Return None for a valid table, else a report naming the first bad column."""
    g = np.asarray(gamma, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 2:
        return f"gamma must be a d x d table with d >= 2, got shape {g.shape}"
    sums = np.sum(np.abs(g) ** 2, axis=0)
    bad = np.nonzero(np.abs(sums - 1.0) > GAMMA_ATOL)[0]
    if bad.size:
        b = int(bad[0])
        return f"column {b}: squared magnitudes sum to {sums[b]:.12g}, expected 1"
    return None


def _require_valid(gamma) -> np.ndarray:
    g = np.asarray(gamma, dtype=complex)
    report = validate_gamma(g)
    if report is not None:
        raise GammaValidationError(report)
    return g


def evolve_joint(psi, gamma) -> np.ndarray:
    """Joint system-environment state after the coupling acts on ``psi``.

    Returns the flat d^3 vector with amplitude psi[i] * gamma[a, b] at
    (system (i + l) mod d, environment (a, b)) for a = (l - i) mod d,
    b = (-i) mod d.  The map is an isometry, so the output has unit norm.
    """
    g = _require_valid(gamma)
    d = g.shape[0]
    psi = check_state(psi, d)
    joint = np.zeros((d, d, d), dtype=complex)
    for i in range(d):
        b = (-i) % d
        for l in range(d):
            a = (l - i) % d
            joint[(i + l) % d, a, b] = psi[i] * g[a, b]
    return joint.reshape(d**3)


def env_vectors(gamma) -> np.ndarray:
    """Effective environment vectors v[l, k] in C^{d^2}.

    v[l, k] carries coefficient (1/d) * omega^{z k} * gamma[(z+l) mod d, z]
    on the environment basis index ((z+l) mod d)*d + z.
    """
    g = _require_valid(gamma)
    d = g.shape[0]
    z = np.arange(d)
    v = np.zeros((d, d, d * d), dtype=complex)
    for l in range(d):
        rows = (z + l) % d
        diag = g[rows, z] / d
        pos = rows * d + z
        for k in range(d):
            v[l, k, pos] = omega_pow(d, z * k) * diag
    return v


def induced_weights(gamma) -> np.ndarray:
    """Pauli-error weights p[l, k] = ||v[l, k]||^2; they sum to 1 exactly."""
    v = env_vectors(gamma)
    return np.sum(np.abs(v) ** 2, axis=2)


def _joint_dim(joint: np.ndarray) -> int:
    d = int(round(np.cbrt(joint.size)))
    if d < 2 or d**3 != joint.size:
        raise ValueError(f"joint state length {joint.size} is not a cube d^3")
    return d


def measure_environment_raw(joint, rng: np.random.Generator) -> tuple[tuple[int, int], np.ndarray]:
    """Projective measurement of the environment in its e_{a,b} basis.

    Samples an outcome (a, b) with probability equal to the total squared
    amplitude on that environment index and returns it together with the
    renormalized conditional system state.
    """
    js = np.asarray(joint, dtype=complex)
    d = _joint_dim(js)
    js = js.reshape(d, d, d)
    probs = np.sum(np.abs(js) ** 2, axis=0).reshape(d * d)
    probs = probs / probs.sum()
    pick = int(rng.choice(d * d, p=probs))
    a, b = divmod(pick, d)
    conditional = js[:, a, b]
    return (a, b), conditional / np.linalg.norm(conditional)


def sample_error(weights, rng: np.random.Generator) -> PauliIndex:
    """Draw a Pauli label (l, k) with probability p[l, k]."""
    p = np.asarray(weights, dtype=float)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError(f"weights must be a (d, d) array, got {p.shape}")
    if np.any(p < 0) or abs(p.sum() - 1.0) > GAMMA_ATOL:
        raise ValueError("weights must be non-negative and sum to 1")
    d = p.shape[0]
    flat = p.reshape(-1)
    pick = int(rng.choice(d * d, p=flat / flat.sum()))
    return PauliIndex(*divmod(pick, d))


def apply_and_correct(psi, idx) -> np.ndarray:
    """Apply the error X_l Z_k, then undo it with Z_{-k} X_{-l}.

    The round trip is the identity, so the result equals ``psi``.
    """
    l, k = idx
    psi = check_state(psi)
    d = psi.shape[0]
    corrupted = pauli_op(d, l, k) @ psi
    zk, xl = pauli_inverse(d, l, k)
    return phase_op(d, zk) @ (shift_op(d, xl) @ corrupted)


def random_gamma(d: int, seed: int) -> np.ndarray:
    """Seeded random valid coupling table: normal entries, columns normalized."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return g / np.linalg.norm(g, axis=0, keepdims=True)


# JSON wire formats.
# Gamma: {"d": D, "gamma": [[[re, im], ...], ...]} with row index a, column b.
# Weights: {"d": D, "p": [[...], ...]} with row index l, column k.


def gamma_to_json(gamma) -> dict:
    g = np.asarray(gamma, dtype=complex)
    d = g.shape[0]
    rows = [[[float(g[a, b].real), float(g[a, b].imag)] for b in range(d)] for a in range(d)]
    return {"d": d, "gamma": rows}


def gamma_from_json(obj: dict) -> np.ndarray:
    d = int(obj["d"])
    rows = obj["gamma"]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ValueError(f"gamma table is not {d} x {d}")
    return np.array(
        [[complex(re, im) for re, im in row] for row in rows], dtype=complex
    )


def weights_to_json(weights) -> dict:
    p = np.asarray(weights, dtype=float)
    return {"d": int(p.shape[0]), "p": [[float(x) for x in row] for row in p]}


def weights_from_json(obj: dict) -> np.ndarray:
    d = int(obj["d"])
    p = np.asarray(obj["p"], dtype=float)
    if p.shape != (d, d):
        raise ValueError(f"weights table is not {d} x {d}")
    return p
