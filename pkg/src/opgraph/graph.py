"""Operator graphs (adjoint-closed spans containing the identity), code
spaces, compression by an isometry, and anticlique verdicts.

A graph carries its generators either as exact Weyl label pairs, as dense
matrices, or both. Two independent dimension oracles are available: counting
distinct label exponents (exact, phases dropped) and the numeric Gram rank of
the dense generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance, dagger, gram_rank, max_abs, orthonormalize
from .weyl import WeylLabelPair, label, pair_adjoint, pair_dense, weyl_dense_stack

__all__ = [
    "OperatorGraph",
    "CodeSpace",
    "CompressionReport",
    "GraphDim",
    "graph_from_labels",
    "graph_from_dense",
    "graph_dim",
    "compress",
    "is_anticlique",
    "kl_table",
    "subsample_labels",
]


@dataclass(frozen=True, eq=False)
class OperatorGraph:
    """Span of generators, closed under adjoints, containing the identity.

    ``label_pairs`` is present iff every generator is a scaled Weyl tensor
    word; such graphs materialize dense generators lazily (they can be large).
    Dense-only graphs keep the explicit matrix list.
    """

    space_dim: int
    label_pairs: tuple[WeylLabelPair, ...] | None = None
    dense: tuple[np.ndarray, ...] | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.label_pairs is None and self.dense is None:
            raise ValueError("graph needs label pairs or dense generators")

    @property
    def has_labels(self) -> bool:
        return self.label_pairs is not None

    @property
    def n_generators(self) -> int:
        if self.label_pairs is not None:
            return len(self.label_pairs)
        return len(self.dense)

    def label_keys(self) -> set[tuple[int, int, int, int]]:
        if self.label_pairs is None:
            raise ValueError("graph has no label form")
        return {p.exponents for p in self.label_pairs}

    def dense_generators(self) -> Iterator[np.ndarray]:
        """Yield dense generators one at a time (lazy for label graphs)."""
        if self.dense is not None:
            yield from self.dense
        else:
            for p in self.label_pairs:
                yield pair_dense(p)


def graph_from_labels(
    n: int,
    pairs: Iterable[WeylLabelPair],
    metadata: dict | None = None,
) -> OperatorGraph:
    """Graph on C^n (x) C^n spanned by the given words, the identity, and the
    adjoint of every word. Deduplicated by exponent quadruple (phases do not
    affect the span); first occurrence wins, identity always first.
    """
    identity = WeylLabelPair(label(n, 0, 0), label(n, 0, 0))
    seen: set[tuple[int, int, int, int]] = set()
    kept: list[WeylLabelPair] = []
    for p in (identity, *pairs):
        if p.n != n:
            raise ValueError(f"pair dimension {p.n} does not match n={n}")
        for q in (p, pair_adjoint(p)):
            if q.exponents not in seen:
                seen.add(q.exponents)
                kept.append(q)
    return OperatorGraph(
        space_dim=n * n,
        label_pairs=tuple(kept),
        metadata=dict(metadata or {}),
    )


def graph_from_dense(
    space_dim: int,
    generators: Iterable[np.ndarray],
    metadata: dict | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> OperatorGraph:
    """Graph from explicit dense generators, with identity and adjoints
    appended when not already present (entrywise within ``tol.absolute``)."""
    mats = [np.asarray(g, dtype=complex) for g in generators]
    for m in mats:
        if m.shape != (space_dim, space_dim):
            raise ValueError(f"generator shape {m.shape} does not match space_dim {space_dim}")
    kept: list[np.ndarray] = [np.eye(space_dim, dtype=complex)]
    for m in mats + [dagger(m) for m in mats]:
        if not any(max_abs(m - k) < tol.absolute for k in kept):
            kept.append(m)
    return OperatorGraph(
        space_dim=space_dim,
        dense=tuple(kept),
        metadata=dict(metadata or {}),
    )


@dataclass(frozen=True)
class CodeSpace:
    """A code subspace, stored as an isometry whose orthonormal columns span it."""

    space_dim: int
    isometry: np.ndarray
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        s = np.asarray(self.isometry)
        if s.ndim != 2 or s.shape[0] != self.space_dim:
            raise ValueError(f"isometry shape {s.shape} does not match space_dim {self.space_dim}")
        if s.shape[1] < 1:
            raise ValueError("code dimension must be >= 1")
        gram = dagger(s) @ s
        if max_abs(gram - np.eye(s.shape[1])) > 1e-10:
            raise ValueError("isometry columns are not orthonormal")

    @property
    def code_dim(self) -> int:
        return self.isometry.shape[1]

    @classmethod
    def from_vectors(
        cls,
        vectors: list[np.ndarray],
        names: Iterable[str] = (),
        tol: Tolerance = DEFAULT_TOL,
    ) -> "CodeSpace":
        basis = orthonormalize(vectors, tol)
        if not basis:
            raise ValueError("vectors span the zero subspace")
        return cls(
            space_dim=basis[0].shape[0],
            isometry=np.column_stack(basis),
            basis_names=tuple(names),
        )


@dataclass(frozen=True)
class GraphDim:
    """Result of running both dimension oracles."""

    labels: int
    gram: int
    agree: bool


def graph_dim(g: OperatorGraph, method: str = "both", tol: Tolerance = DEFAULT_TOL):
    """Dimension of the span of the graph's generators.

    method "labels": count of distinct exponent quadruples (exact; requires
    label form). method "gram": numeric Gram rank of the dense generators;
    this materializes every generator, so pair it with subsample_labels for
    graphs with tens of thousands of them. method "both": a GraphDim carrying
    both values and an agreement flag.
    """
    if method == "labels":
        return len(g.label_keys())
    if method == "gram":
        return gram_rank(list(g.dense_generators()), tol)
    if method == "both":
        labels = len(g.label_keys())
        gram = gram_rank(list(g.dense_generators()), tol)
        return GraphDim(labels=labels, gram=gram, agree=labels == gram)
    raise ValueError(f"unknown method {method!r}")


def compress(g: OperatorGraph, code: CodeSpace) -> list[np.ndarray]:
    """Compression S^dag V S of every generator V by the code isometry S.

    Each result has shape code_dim x code_dim and equals P_K V P_K restricted
    to the code subspace. Label graphs take a batched path through the
    Kronecker identity (A (x) B) vec(M) = vec(A M B^T), which avoids
    materializing each n^2 x n^2 generator; the results are the same
    compressions up to roundoff.
    """
    if g.space_dim != code.space_dim:
        raise ValueError(f"graph dim {g.space_dim} does not match code space dim {code.space_dim}")
    if g.label_pairs is not None:
        return list(_compress_label_pairs(g.label_pairs, code.isometry))
    s = code.isometry
    sd = dagger(s)
    return [sd @ (v @ s) for v in g.dense_generators()]


_COMPRESS_CHUNK = 2048


def _compress_label_pairs(pairs: tuple[WeylLabelPair, ...], s: np.ndarray) -> np.ndarray:
    n = pairs[0].n
    d = s.shape[1]
    # column j of s, row-major reshaped, is the coefficient matrix of the
    # j-th code vector in the product basis
    m = np.ascontiguousarray(s.T).reshape(d, n, n)
    mc_flat = m.conj().reshape(d, n * n)
    out = np.empty((len(pairs), d, d), dtype=complex)
    for start in range(0, len(pairs), _COMPRESS_CHUNK):
        chunk = pairs[start : start + _COMPRESS_CHUNK]
        a = weyl_dense_stack([p.left for p in chunk])
        b = weyl_dense_stack([p.right for p in chunk])
        # t[g, j] = A_g M_j B_g^T, entrywise conjugate-paired against M_l
        t = np.matmul(a[:, None], m[None, :])
        t = np.matmul(t, b[:, None].swapaxes(-1, -2))
        c = np.matmul(t.reshape(len(chunk), d, n * n), mc_flat.T)
        out[start : start + len(chunk)] = c.swapaxes(1, 2)
    return out


@dataclass(frozen=True)
class CompressionReport:
    """Anticlique verdict for a (graph, code) pair.

    verdict is true iff the compressions span a one-dimensional space (the
    multiples of the identity on the code); residual is the worst entrywise
    deviation of any compression from c_V * I with c_V = trace / code_dim.
    """

    verdict: bool
    compressed_dim: int
    residual: float
    c_values: tuple[complex, ...]


def is_anticlique(g: OperatorGraph, code: CodeSpace, tol: Tolerance = DEFAULT_TOL) -> CompressionReport:
    """Check dim P_K V P_K = 1 numerically.

    The verdict comes from the Gram rank of all compressed generators; the
    residual diagnostic cross-checks that each compression is a scalar
    multiple of the identity on the code.
    """
    compressions = compress(g, code)
    k = code.code_dim
    eye = np.eye(k)
    c_values = []
    residual = 0.0
    for c in compressions:
        c_v = np.trace(c) / k
        c_values.append(complex(c_v))
        residual = max(residual, max_abs(c - c_v * eye))
    dim = gram_rank(compressions, tol)
    return CompressionReport(
        verdict=dim == 1,
        compressed_dim=dim,
        residual=residual,
        c_values=tuple(c_values),
    )


def kl_table(g: OperatorGraph, code: CodeSpace) -> np.ndarray:
    """Raw error-orthogonality table t[v, j, k] = <s_j, V_v s_k> over the
    code's orthonormal basis. An anticlique makes every off-diagonal entry
    vanish and every diagonal constant per generator."""
    return np.stack(compress(g, code))


def subsample_labels(g: OperatorGraph, size: int, seed: int) -> OperatorGraph:
    """Deterministic random subset of a label graph's generators, for Gram
    cross-checks where the full Gram matrix is out of desk-scale budget."""
    if g.label_pairs is None:
        raise ValueError("subsample_labels needs a label graph")
    if size >= len(g.label_pairs):
        return g
    rng = np.random.default_rng(seed)
    idx = sorted(rng.choice(len(g.label_pairs), size=size, replace=False))
    return OperatorGraph(
        space_dim=g.space_dim,
        label_pairs=tuple(g.label_pairs[i] for i in idx),
        metadata={**g.metadata, "subsample": {"size": size, "seed": seed}},
    )
