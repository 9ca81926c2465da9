"""Fourier basis and generalized Pauli (Weyl) operators on C^n.

Conventions here follow the constructions this package verifies: X is the
unitary that is *diagonal in the standard basis*, X e_j = w^j e_j with
w = exp(2 pi i / n) (0-based j), and Z is diagonal in the Fourier basis,
Z f_j = w^j f_j. Under these definitions X shifts the Fourier basis,
X f_j = f_{j+1 mod n}, and the commutation rule is Z X = w X Z. Note this is
the reverse of the more common shift/clock assignment.

Labels represent scaled words w^phase * X^kx * Z^kz exactly, with all four
integers reduced mod n, so long products and powers carry no numerical drift.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import kron

__all__ = [
    "fourier_basis",
    "x_matrix",
    "z_matrix",
    "WeylLabel",
    "WeylLabelPair",
    "label",
    "label_mul",
    "label_pow",
    "label_adjoint",
    "weyl_dense",
    "weyl_dense_stack",
    "pair_adjoint",
    "pair_dense",
]


def fourier_basis(n: int) -> np.ndarray:
    """n x n unitary whose column j (0-based) is the Fourier vector f_{j+1},
    with entries exp(2 pi i j k / n) / sqrt(n)."""
    if n < 1:
        raise ValueError("fourier_basis needs n >= 1")
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return np.exp(2j * np.pi * (j * k % n) / n) / np.sqrt(n)


def x_matrix(n: int) -> np.ndarray:
    """X = diag(1, w, w^2, ...): diagonal in the standard basis."""
    return np.diag(np.exp(2j * np.pi * np.arange(n) / n))


def z_matrix(n: int) -> np.ndarray:
    """Z maps e_j to e_{j-1 mod n}; equivalently Z f_j = w^j f_j."""
    return np.roll(np.eye(n, dtype=complex), -1, axis=0)


@dataclass(frozen=True)
class WeylLabel:
    """Exact representation of w^phase * X^kx * Z^kz on C^n, exponents mod n."""

    n: int
    kx: int
    kz: int
    phase: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("label dimension must be >= 1")
        object.__setattr__(self, "kx", self.kx % self.n)
        object.__setattr__(self, "kz", self.kz % self.n)
        object.__setattr__(self, "phase", self.phase % self.n)

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.kx, self.kz)

    def is_identity_word(self) -> bool:
        return self.kx == 0 and self.kz == 0


def label(n: int, kx: int, kz: int, phase: int = 0) -> WeylLabel:
    return WeylLabel(n, kx, kz, phase)


def label_mul(a: WeylLabel, b: WeylLabel) -> WeylLabel:
    """Product label in canonical X-then-Z order.

    Moving b's X-power past a's Z-power uses Z^p X^q = w^{pq} X^q Z^p, so the
    commutation contributes a.kz * b.kx to the phase exponent.
    """
    if a.n != b.n:
        raise ValueError(f"mismatched dimensions: {a.n} vs {b.n}")
    return WeylLabel(
        a.n,
        a.kx + b.kx,
        a.kz + b.kz,
        a.phase + b.phase + a.kz * b.kx,
    )


def label_pow(a: WeylLabel, s: int) -> WeylLabel:
    """s-th power by repeated multiplication, s >= 0."""
    if s < 0:
        raise ValueError("label_pow needs s >= 0")
    result = WeylLabel(a.n, 0, 0, 0)
    for _ in range(s):
        result = label_mul(result, a)
    return result


def label_adjoint(a: WeylLabel) -> WeylLabel:
    """Label of the conjugate transpose: (w^p X^a Z^b)^* = w^{ab-p} X^{-a} Z^{-b}."""
    return WeylLabel(a.n, -a.kx, -a.kz, a.kx * a.kz - a.phase)


def weyl_dense(a: WeylLabel) -> np.ndarray:
    """Dense unitary realization of a label in the standard basis.

    Column j of X^kx Z^kz has its single entry at row (j - kz) mod n with
    value w^{kx * row}.
    """
    n = a.n
    cols = np.arange(n)
    rows = (cols - a.kz) % n
    m = np.zeros((n, n), dtype=complex)
    m[rows, cols] = np.exp(2j * np.pi * ((a.phase + a.kx * rows) % n) / n)
    return m


def weyl_dense_stack(labels: list[WeylLabel]) -> np.ndarray:
    """Dense realizations of many labels at once, shape (len(labels), n, n).

    Same formula as weyl_dense, vectorized over the family.
    """
    if not labels:
        raise ValueError("weyl_dense_stack needs at least one label")
    n = labels[0].n
    kx = np.array([a.kx for a in labels])
    kz = np.array([a.kz for a in labels])
    phase = np.array([a.phase for a in labels])
    cols = np.arange(n)
    rows = (cols[None, :] - kz[:, None]) % n
    out = np.zeros((len(labels), n, n), dtype=complex)
    g = np.arange(len(labels))[:, None]
    out[g, rows, cols[None, :]] = np.exp(
        2j * np.pi * ((phase[:, None] + kx[:, None] * rows) % n) / n
    )
    return out


@dataclass(frozen=True)
class WeylLabelPair:
    """Tensor-product word left (x) right, both factors on C^n."""

    left: WeylLabel
    right: WeylLabel

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ValueError(f"mismatched factor dimensions: {self.left.n} vs {self.right.n}")

    @property
    def n(self) -> int:
        return self.left.n

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        """Exponent quadruple (left kx, left kz, right kx, right kz); the
        global phase is dropped, matching span-level identity of labels."""
        return (self.left.kx, self.left.kz, self.right.kx, self.right.kz)

    def is_identity_word(self) -> bool:
        return self.left.is_identity_word() and self.right.is_identity_word()


def pair_adjoint(p: WeylLabelPair) -> WeylLabelPair:
    return WeylLabelPair(label_adjoint(p.left), label_adjoint(p.right))


def pair_dense(p: WeylLabelPair) -> np.ndarray:
    return kron(weyl_dense(p.left), weyl_dense(p.right))
