"""Quantization of q-nary graphs.

Every vertex carries the unitary q x q discrete-Fourier-transform scattering
matrix; assembling the vertex blocks along the edge incidence gives the dense
E x E matrix Sigma.  With a diagonal matrix L of positive edge lengths,
U(k) = e^{ikL} Sigma is the unitary evolution operator at wavenumber k.

The coefficients a_n of det(xi I - U(k)) = sum_n a_n xi^(E-n) are computed
two ways: directly, by determinant evaluation at scaled roots of unity
followed by inverse-DFT interpolation, and as finite sums over primitive
pseudo orbits,

    a_n = sum over pseudo orbits of total length n of
          (-1)^(orbit count) * amplitude * exp(i k * metric length),

where an orbit's amplitude is the cyclic product of Sigma entries along its
edge sequence and its metric length the sum of traversed edge lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .debruijn import PeriodicOrbit, PseudoOrbit, QNaryGraph, build_graph, primitive_pseudo_orbits
from .words import DEFAULT_ENUMERATION_BUDGET, BudgetExceededError

DEFAULT_MAX_CHARPOLY_DIM = 64


def dft_matrix(q: int) -> np.ndarray:
    """The unitary DFT matrix with entries omega^(jk) / sqrt(q), omega = e^(2 pi i / q)."""
    if q < 1:
        raise ValueError(f"size must be at least 1, got {q}")
    j = np.arange(q)
    phase = (np.outer(j, j) % q) * (2.0 * np.pi / q)
    return np.exp(1j * phase) / np.sqrt(q)


@dataclass(frozen=True, eq=False)
class ScatteringMatrix:
    """Dense E x E vertex-scattering assembly for one graph."""

    q: int
    m: int
    entries: np.ndarray


def assemble_sigma(graph: QNaryGraph) -> ScatteringMatrix:
    """Assemble Sigma: entry (e, e') is nonzero iff terminus(e') = origin(e).

    At vertex w = a_1..a_m the incoming edge b.a_1..a_m and outgoing edge
    a_1..a_m.c couple with amplitude omega^(b c) / sqrt(q), where b is the
    first letter of the incoming edge and c the last letter of the outgoing
    one.  The result is unitary (one DFT block per vertex).
    """
    q, m = graph.q, graph.m
    V, E = graph.num_vertices, graph.num_edges
    dft = dft_matrix(q)
    entries = np.zeros((E, E), dtype=complex)
    for v in range(V):
        for b in range(q):
            e_in = b * V + v
            for c in range(q):
                entries[v * q + c, e_in] = dft[c, b]
    entries.setflags(write=False)
    return ScatteringMatrix(q=q, m=m, entries=entries)


@dataclass(frozen=True, eq=False)
class EdgeLengths:
    """Positive edge lengths in [1, 2), with the seed that generated them."""

    lengths: np.ndarray
    seed: int


def sample_edge_lengths(graph: QNaryGraph, seed: int) -> EdgeLengths:
    """Draw E i.i.d. lengths uniform on [1, 2) from numpy's PCG64 generator.

    The same seed reproduces the same vector bit for bit.  Random draws are
    rationally independent with probability 1, which is the premise of the
    degeneracy-grouped wavenumber average.
    """
    rng = np.random.default_rng(seed)
    lengths = 1.0 + rng.random(graph.num_edges)
    lengths.setflags(write=False)
    return EdgeLengths(lengths=lengths, seed=int(seed))


@dataclass(frozen=True, eq=False)
class SpectralInstance:
    """A quantized graph: topology, scattering matrix, and edge lengths."""

    graph: QNaryGraph
    sigma: ScatteringMatrix
    lengths: EdgeLengths
    _expansion_cache: dict = field(default_factory=dict, repr=False)
    _orbit_cache: dict = field(default_factory=dict, repr=False)


def build_instance(
    q: int, m: int, seed: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> SpectralInstance:
    """Convenience constructor: graph, Sigma, and seeded edge lengths."""
    graph = build_graph(q, m, budget=budget)
    return SpectralInstance(
        graph=graph,
        sigma=assemble_sigma(graph),
        lengths=sample_edge_lengths(graph, seed),
    )


def evolution_operator(inst: SpectralInstance, k: float) -> np.ndarray:
    """U(k) = diag(e^{i k l_e}) Sigma, unitary for every real k."""
    k = float(k)
    if not math.isfinite(k):
        raise ValueError(f"wavenumber must be finite, got {k}")
    phases = np.exp(1j * k * inst.lengths.lengths)
    return phases[:, None] * inst.sigma.entries


@dataclass(frozen=True, eq=False)
class CharPolyCoefficients:
    """Coefficients of det(xi I - U): a[n] multiplies xi^(N-n), a[0] = 1."""

    a: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.a) - 1


def char_poly_direct(
    U: np.ndarray,
    max_dim: int = DEFAULT_MAX_CHARPOLY_DIM,
    radius: float = 1.0,
) -> CharPolyCoefficients:
    """Characteristic polynomial coefficients by determinant interpolation.

    det(xi I - U) is evaluated at the N+1 nodes radius * e^(2 pi i j/(N+1));
    an inverse DFT recovers the coefficients exactly (up to roundoff), and a
    power-of-radius rescaling undoes the node scaling.  The leading
    coefficient is pinned to its known value 1.  For unitary U the default
    radius 1 keeps all node values within a modest dynamic range.
    """
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {U.shape}")
    N = U.shape[0]
    if N < 1:
        raise ValueError("matrix must be at least 1 x 1")
    if N > max_dim:
        raise BudgetExceededError(f"dimension {N} exceeds cap {max_dim}")
    nodes = radius * np.exp(2j * np.pi * np.arange(N + 1) / (N + 1))
    stack = nodes[:, None, None] * np.eye(N)[None, :, :] - U[None, :, :]
    values = np.linalg.det(stack)
    # values[j] = sum_t b_t e^(2 pi i j t/(N+1)) with b_t = c_t radius^t,
    # where c_t is the xi^t coefficient; fft inverts that relation.
    b = np.fft.fft(values) / (N + 1)
    if radius != 1.0:
        b = b / radius ** np.arange(N + 1)
    a = b[::-1].copy()
    a[0] = 1.0
    a.setflags(write=False)
    return CharPolyCoefficients(a=a)


def orbit_amplitude(orbit: PeriodicOrbit, sigma: ScatteringMatrix) -> complex:
    """Cyclic product of Sigma entries along the orbit's edge sequence.

    The modulus is always q^(-length/2), one factor 1/sqrt(q) per step.
    """
    if orbit.word.q != sigma.q:
        raise ValueError("orbit and scattering matrix alphabet sizes differ")
    edges = orbit.edge_sequence(sigma.m)
    S = sigma.entries
    amp = 1 + 0j
    for i, e in enumerate(edges):
        amp *= S[edges[(i + 1) % len(edges)], e]
    return amp


def pseudo_orbit_amplitude(po: PseudoOrbit, sigma: ScatteringMatrix) -> complex:
    """Product of member-orbit amplitudes; the empty pseudo orbit gives 1."""
    amp = 1 + 0j
    for orbit in po.orbits:
        amp *= orbit_amplitude(orbit, sigma)
    return amp


def pseudo_orbit_length(po: PseudoOrbit, lengths: EdgeLengths, graph: QNaryGraph) -> float:
    """Total metric length: edge lengths summed with traversal multiplicity."""
    if po.q != graph.q:
        raise ValueError("pseudo orbit and graph alphabet sizes differ")
    total = 0.0
    for orbit in po.orbits:
        for e in orbit.edge_sequence(graph.m):
            total += lengths.lengths[e]
    return total


def _orbit_data(inst: SpectralInstance, orbit: PeriodicOrbit) -> tuple[complex, float]:
    key = orbit.word.letters
    data = inst._orbit_cache.get(key)
    if data is None:
        edges = orbit.edge_sequence(inst.graph.m)
        amp = orbit_amplitude(orbit, inst.sigma)
        length = float(sum(inst.lengths.lengths[e] for e in edges))
        data = (amp, length)
        inst._orbit_cache[key] = data
    return data


def expansion_terms(inst: SpectralInstance, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-pseudo-orbit expansion data for coefficient n.

    Returns (weights, metric_lengths) over the pseudo orbits of total length
    n, where weights[i] = (-1)^(orbit count) * amplitude.  Cached on the
    instance; the arrays are read-only.
    """
    cached = inst._expansion_cache.get(n)
    if cached is None:
        orbits = primitive_pseudo_orbits(inst.graph.q, n)
        weights = np.empty(len(orbits), dtype=complex)
        metric = np.empty(len(orbits), dtype=float)
        for i, po in enumerate(orbits):
            amp = 1 + 0j
            length = 0.0
            for orbit in po.orbits:
                a, l = _orbit_data(inst, orbit)
                amp *= a
                length += l
            weights[i] = -amp if po.num_orbits % 2 else amp
            metric[i] = length
        weights.setflags(write=False)
        metric.setflags(write=False)
        cached = (weights, metric)
        inst._expansion_cache[n] = cached
    return cached


def coeff_from_pseudo_orbits(n: int, inst: SpectralInstance, k: float) -> complex:
    """Coefficient a_n rebuilt from the primitive pseudo orbits of length n."""
    E = inst.graph.num_edges
    if not 0 <= n <= E:
        raise ValueError(f"coefficient index {n} outside 0..{E}")
    k = float(k)
    if not math.isfinite(k):
        raise ValueError(f"wavenumber must be finite, got {k}")
    weights, metric = expansion_terms(inst, n)
    return complex(np.dot(weights, np.exp(1j * k * metric)))
