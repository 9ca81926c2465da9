"""Builders for the three verified constructions and their claimed dimensions.

* section2: four-dimensional space, graph spanned by five Pauli tensor words,
  two-dimensional code from a pair of product vectors.
* section3: C^n (x) C^n, graph spanned by all powers of the one-sided words
  (X Z^k (x) I) and (I (x) X Z^k), code spanned by the diagonal Fourier
  products f_j (x) f_j.
* section4: the section3 graph enlarged by three label families (off-diagonal
  shifts, allowed equal shifts, clock words off the subgroup), with an
  entangled code built from subgroup-supported diagonal vectors.

Closed-form dimension claims are evaluated separately and marked as claims;
computed ranks are the ground truth the reports compare them against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import CodeSpace, OperatorGraph, graph_from_dense, graph_from_labels
from .linalg import kron
from .weyl import WeylLabelPair, fourier_basis, label, label_pow, x_matrix

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "build_section2",
    "build_section3",
    "Section4Params",
    "ResidueSetA",
    "residue_set_A",
    "build_code_K1",
    "build_section4",
    "build_remark2",
    "PredictedDims",
    "predicted_dims",
    "claimed_dim_section2",
    "claimed_dim_section3",
    "claimed_dim_section4",
    "claimed_dim_remark2",
    "baseline_bounds",
    "enumerate_section4_params",
]

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
# transpose of the more common sigma_y sign convention; every check here is
# insensitive to the sign
PAULI_Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def build_section2() -> tuple[OperatorGraph, CodeSpace]:
    """Five-generator graph {I, sx(x)I, sy(x)I, I(x)sy, I(x)sz} on C^2 (x) C^2
    and the two-dimensional code spanned by e1(x)(1,1) and e2(x)(1,-1)."""
    eye = np.eye(2, dtype=complex)
    generators = [
        np.eye(4, dtype=complex),
        kron(PAULI_X, eye),
        kron(PAULI_Y, eye),
        kron(eye, PAULI_Y),
        kron(eye, PAULI_Z),
    ]
    g = graph_from_dense(4, generators, metadata={"name": "section2"})
    f_plus = kron(np.array([1, 0]), np.array([1, 1]))
    f_minus = kron(np.array([0, 1]), np.array([1, -1]))
    code = CodeSpace.from_vectors([f_plus, f_minus], names=("f+", "f-"))
    return g, code


def _one_sided_power_pairs(n: int) -> list[WeylLabelPair]:
    """All nontrivial powers (X Z^k)^s placed on one tensor factor."""
    identity = label(n, 0, 0)
    pairs = []
    for k in range(n):
        base = label(n, 1, k)
        for s in range(1, n):
            pairs.append(WeylLabelPair(label_pow(base, s), identity))
    for k in range(n):
        base = label(n, 1, k)
        for s in range(1, n):
            pairs.append(WeylLabelPair(identity, label_pow(base, s)))
    return pairs


def build_section3(n: int, allow_n2: bool = False) -> tuple[OperatorGraph, CodeSpace]:
    """Product-vector construction on C^n (x) C^n.

    Graph: span of (X Z^k)^s on either factor for 0 <= k <= n-1 and
    1 <= s <= n-1, plus identity, adjoint-closed at label level. Code: the n
    vectors f_j (x) f_j. n = 2 degenerates and is rejected without the
    override flag.
    """
    if n < 2 or (n == 2 and not allow_n2):
        raise ValueError(f"construction requires n > 2 (got n={n}); pass allow_n2 to override n=2")
    g = graph_from_labels(n, _one_sided_power_pairs(n), metadata={"name": "section3", "n": n})
    f = fourier_basis(n)
    vectors = [kron(f[:, j], f[:, j]) for j in range(n)]
    code = CodeSpace.from_vectors(vectors, names=tuple(f"h_{j + 1}" for j in range(n)))
    return g, code


@dataclass(frozen=True)
class Section4Params:
    """Parameters (p, y, h, d) of the entangled-code construction, n = p*y.

    Validity needs p, y >= 2, h >= 0, and (h+1)(d+1) >= y >= (h+1)d. The
    default d >= 2 keeps the code at least one qubit wide; d = 1 is allowed
    only behind the explicit override.
    """

    p: int
    y: int
    h: int
    d: int
    allow_d1: bool = False

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"requires p >= 2 (got p={self.p})")
        if self.y < 2:
            raise ValueError(f"requires y >= 2 (got y={self.y})")
        if self.h < 0:
            raise ValueError(f"requires h >= 0 (got h={self.h})")
        if self.d < 1 or (self.d == 1 and not self.allow_d1):
            raise ValueError(
                f"requires d >= 2 (got d={self.d}); a d=1 code is below one qubit, "
                "pass allow_d1 to override"
            )
        if not (self.h + 1) * (self.d + 1) >= self.y:
            raise ValueError(
                f"requires (h+1)(d+1) >= y: ({self.h}+1)({self.d}+1) = "
                f"{(self.h + 1) * (self.d + 1)} < {self.y}"
            )
        if not self.y >= (self.h + 1) * self.d:
            raise ValueError(
                f"requires y >= (h+1)d: {self.y} < ({self.h}+1)*{self.d} = "
                f"{(self.h + 1) * self.d}"
            )

    @property
    def n(self) -> int:
        return self.p * self.y


@dataclass(frozen=True)
class ResidueSetA:
    """Shift residues mod y whose diagonal translations move every code
    vector's support off every other code vector's support.

    A residue r is allowed iff r != (d-j)(h+1) mod y and
    r != y+(j-d)(h+1) mod y for every j in 1..d; residue 0 is never allowed.
    Membership of an integer m depends only on m mod y.
    """

    y: int
    h: int
    d: int
    allowed: frozenset[int]

    def __contains__(self, m: int) -> bool:
        return m % self.y in self.allowed

    def members(self, limit: int) -> list[int]:
        """All allowed m in [0, limit)."""
        return [m for m in range(limit) if m in self]

    def count_strict(self, n: int) -> int:
        """Number of allowed m with 1 <= m < n."""
        return len([m for m in range(1, n) if m in self])


def residue_set_A(y: int, h: int, d: int) -> ResidueSetA:
    """Enumerate the two exclusion families over j in 1..d, reduced mod y."""
    excluded = set()
    for j in range(1, d + 1):
        excluded.add(((d - j) * (h + 1)) % y)
        excluded.add((y + (j - d) * (h + 1)) % y)
    allowed = frozenset(r for r in range(y) if r not in excluded)
    return ResidueSetA(y=y, h=h, d=d, allowed=allowed)


def build_code_K1(params: Section4Params) -> CodeSpace:
    """Entangled code vectors q_1..q_d on C^n (x) C^n.

    q_1 sums f_{j+1} (x) f_{j+1} over the order-p subgroup
    {0, y, ..., (p-1)y} of Z_n; each following vector applies the diagonal
    shift X^{h+1} (x) X^{h+1}. All are normalized by 1/sqrt(p).
    """
    n = params.n
    f = fourier_basis(n)
    q = np.zeros(n * n, dtype=complex)
    for t in range(params.p):
        col = f[:, t * params.y]
        q += kron(col, col)
    q /= np.sqrt(params.p)
    xh = np.linalg.matrix_power(x_matrix(n), params.h + 1)
    shift = kron(xh, xh)
    vectors = [q]
    for _ in range(params.d - 1):
        vectors.append(shift @ vectors[-1])
    return CodeSpace(
        space_dim=n * n,
        isometry=np.column_stack(vectors),
        basis_names=tuple(f"q_{k + 1}" for k in range(params.d)),
    )


def _section4_pairs(params: Section4Params) -> list[WeylLabelPair]:
    n = params.n
    a_set = residue_set_A(params.y, params.h, params.d)
    pairs: list[WeylLabelPair] = []
    # off-diagonal shifts: X^m Z^k (x) X^j Z^s with m != j
    for m in range(n):
        for j in range(n):
            if m == j:
                continue
            for k in range(n):
                for s in range(n):
                    pairs.append(WeylLabelPair(label(n, m, k), label(n, j, s)))
    # equal shifts with allowed residue
    for m in range(1, n):
        if m not in a_set:
            continue
        for k in range(n):
            for s in range(n):
                pairs.append(WeylLabelPair(label(n, m, k), label(n, m, s)))
    # equal shifts with clock exponents off the subgroup
    for m in range(n):
        for k in range(n):
            for s in range(n):
                if (k + s) % params.p != 0:
                    pairs.append(WeylLabelPair(label(n, m, k), label(n, m, s)))
    pairs.extend(_one_sided_power_pairs(n))
    return pairs


def build_section4(params: Section4Params) -> tuple[OperatorGraph, CodeSpace]:
    """Entangled-code construction: the enlarged graph and the code from
    build_code_K1."""
    g = graph_from_labels(
        params.n,
        _section4_pairs(params),
        metadata={
            "name": "section4",
            "p": params.p,
            "y": params.y,
            "h": params.h,
            "d": params.d,
            "n": params.n,
        },
    )
    return g, build_code_K1(params)


def build_remark2(n: int) -> tuple[OperatorGraph, CodeSpace]:
    """Off-diagonal-shift family plus identity, against the f_j (x) f_j code."""
    pairs = []
    for m in range(n):
        for j in range(n):
            if m == j:
                continue
            for k in range(n):
                for s in range(n):
                    pairs.append(WeylLabelPair(label(n, m, k), label(n, j, s)))
    g = graph_from_labels(n, pairs, metadata={"name": "remark2", "n": n})
    f = fourier_basis(n)
    vectors = [kron(f[:, j], f[:, j]) for j in range(n)]
    code = CodeSpace.from_vectors(vectors, names=tuple(f"h_{j + 1}" for j in range(n)))
    return g, code


def claimed_dim_section2() -> int:
    return 5


def claimed_dim_section3(n: int) -> int:
    """Claimed closed form 2n(n-1)+1 for the section3 graph dimension."""
    return 2 * n * (n - 1) + 1


def claimed_dim_section4(params: Section4Params) -> int:
    """Claimed closed form for the section4 graph dimension; the count of
    allowed strict shifts enters as #A' and its complement as n - #A'."""
    n = params.n
    a_strict = residue_set_A(params.y, params.h, params.d).count_strict(n)
    r_a = n - a_strict
    tail = (params.y * (params.p - 1) * (params.p + 2)) // 2 + (n * (params.y - 1)) // 2
    return n**3 * (n - 1) + a_strict * n**2 + r_a * tail + 1


def claimed_dim_remark2(n: int) -> int:
    return n**3 * (n - 1) + 1


@dataclass(frozen=True)
class PredictedDims:
    """Claimed (not computed) dimensions for a parameter point. These are
    formula evaluations only; reports must compare them against ranks."""

    section3: int
    section4: int
    a_strict: int
    params: Section4Params


def predicted_dims(params: Section4Params) -> PredictedDims:
    return PredictedDims(
        section3=claimed_dim_section3(params.n),
        section4=claimed_dim_section4(params),
        a_strict=residue_set_A(params.y, params.h, params.d).count_strict(params.n),
        params=params,
    )


def baseline_bounds(dim_h: int, dim_k: int) -> dict[str, int]:
    """Upper bounds on correctable-graph dimension from the two general
    estimates: v(v+1) <= dim_h/dim_k for arbitrary graphs, and
    (dim_h - dim_k)/(dim_k - 1) for commutative ones."""
    if dim_k < 2:
        raise ValueError(f"requires dim_k >= 2 (got {dim_k})")
    if dim_h < dim_k:
        raise ValueError(f"requires dim_h >= dim_k (got {dim_h} < {dim_k})")
    ratio = dim_h / dim_k
    v = 0
    while (v + 1) * (v + 2) <= ratio:
        v += 1
    return {
        "knill_max": v,
        "commutative_max": (dim_h - dim_k) // (dim_k - 1),
    }


def enumerate_section4_params(n_max: int) -> list[Section4Params]:
    """All valid (p, y, h, d) with p*y <= n_max and d >= 2, sorted by
    (n, p, y, h, d)."""
    points = []
    for p in range(2, n_max // 2 + 1):
        for y in range(2, n_max // p + 1):
            for h in range(0, y):
                for d in range(2, y + 1):
                    if (h + 1) * (d + 1) >= y >= (h + 1) * d:
                        points.append(Section4Params(p=p, y=y, h=h, d=d))
    return sorted(points, key=lambda q: (q.n, q.p, q.y, q.h, q.d))
