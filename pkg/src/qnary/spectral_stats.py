"""Variance of characteristic-polynomial coefficients over the wavenumber.

Averaged over k, the coefficients a_n have mean zero for n >= 1, and their
variance reduces to a double sum over pairs of primitive pseudo orbits with
equal metric length.  Two routes evaluate it:

* the diagonal approximation keeps only self-pairings, giving
  sum |A|^2 = Str * q^(-n), which equals (q-1)/q for every n >= 2;
* with rationally independent edge lengths, equal metric length forces equal
  edge-multiplicity vectors, so grouping by that exact integer key and
  summing |group total|^2 evaluates the k-average exactly.

A Monte-Carlo estimator over uniform k samples cross-checks the pipeline,
and circular-ensemble reference values (CUE = 1, COE = 1 + n(E-n)/(E+1))
provide the random-matrix comparison point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .debruijn import edge_multiplicities, primitive_pseudo_orbits
from .quantum import (
    SpectralInstance,
    build_instance,
    char_poly_direct,
    evolution_operator,
    expansion_terms,
)
from .words import count_strictly_decreasing


def diagonal_variance(q: int, n: int) -> float:
    """Closed-form diagonal approximation: Str * q^(-n), i.e. (q-1)/q for n >= 2."""
    return count_strictly_decreasing(q, n) / q**n


def diagonal_variance_from_orbits(inst: SpectralInstance, n: int) -> float:
    """Sum of |amplitude|^2 over the enumerated pseudo orbits of length n."""
    weights, _ = expansion_terms(inst, n)
    return float(np.sum(np.abs(weights) ** 2))


def exact_grouped_variance(inst: SpectralInstance, n: int) -> float:
    """The k-averaged variance, exact under rationally independent lengths.

    Pseudo orbits of length n are grouped by their edge-multiplicity vector;
    each group contributes |sum of signed amplitudes|^2.
    """
    groups: dict[tuple[int, ...], complex] = {}
    for po, weight in zip(
        primitive_pseudo_orbits(inst.graph.q, n), expansion_terms(inst, n)[0]
    ):
        key = edge_multiplicities(po, inst.graph).counts
        groups[key] = groups.get(key, 0j) + weight
    return float(sum(abs(v) ** 2 for v in groups.values()))


def monte_carlo_variance(
    inst: SpectralInstance, n: int, samples: int, k_max: float, seed: int
) -> tuple[float, float]:
    """Estimate the k-average of |a_n|^2 from uniform k draws on [0, k_max].

    Returns (sample mean, standard error); deterministic for a given seed.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if not k_max > 0:
        raise ValueError(f"k_max must be positive, got {k_max}")
    rng = np.random.default_rng(seed)
    ks = rng.uniform(0.0, k_max, size=samples)
    values = np.empty(samples)
    for i, k in enumerate(ks):
        coeffs = char_poly_direct(evolution_operator(inst, k))
        values[i] = abs(coeffs.a[n]) ** 2
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(samples))


def monte_carlo_coefficient_means(
    inst: SpectralInstance, samples: int, k_max: float, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Sample means of the complex coefficients a_0..a_E over uniform k.

    Returns (means, standard errors); the standard error combines real and
    imaginary scatter.  Averaged over k, every a_n with n >= 1 has mean zero.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if not k_max > 0:
        raise ValueError(f"k_max must be positive, got {k_max}")
    rng = np.random.default_rng(seed)
    ks = rng.uniform(0.0, k_max, size=samples)
    E = inst.graph.num_edges
    coeffs = np.empty((samples, E + 1), dtype=complex)
    for i, k in enumerate(ks):
        coeffs[i] = char_poly_direct(evolution_operator(inst, k)).a
    means = coeffs.mean(axis=0)
    spread = np.sqrt(np.mean(np.abs(coeffs - means) ** 2, axis=0))
    return means, spread / np.sqrt(samples)


def rmt_reference(ensemble: str, n: int, dim: int) -> float:
    """Circular-ensemble coefficient variance: CUE -> 1, COE -> 1 + n(E-n)/(E+1)."""
    if not 0 <= n <= dim:
        raise ValueError(f"coefficient index {n} outside 0..{dim}")
    name = ensemble.upper()
    if name == "CUE":
        return 1.0
    if name == "COE":
        return 1.0 + n * (dim - n) / (dim + 1)
    raise ValueError(f"unknown ensemble {ensemble!r}, expected CUE or COE")


@dataclass(frozen=True)
class VarianceReport:
    """One coefficient-variance record, JSON-serializable via to_dict()."""

    q: int
    m: int
    n: int
    seed: int
    samples: int
    pseudo_orbit_count: int
    diag: float
    exact_grouped: float
    cue_ref: float
    coe_ref: float
    mc_estimate: float | None = None
    mc_std_error: float | None = None
    k_max: float | None = None

    def to_dict(self) -> dict:
        out = {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "seed": self.seed,
            "samples": self.samples,
            "pseudo_orbit_count": self.pseudo_orbit_count,
            "diag": self.diag,
            "exact_grouped": self.exact_grouped,
            "cue_ref": self.cue_ref,
            "coe_ref": self.coe_ref,
        }
        if self.samples > 0:
            out["mc_estimate"] = self.mc_estimate
            out["mc_std_error"] = self.mc_std_error
            out["k_max"] = self.k_max
        return out


def variance_report(
    q: int,
    m: int,
    n: int,
    seed: int,
    samples: int = 0,
    k_max: float = 1e4,
) -> VarianceReport:
    """Assemble diagonal, exact-grouped, optional Monte-Carlo, and reference
    values for one (q, m, n) configuration.  Monte-Carlo fields are filled
    only when samples > 0."""
    inst = build_instance(q, m, seed)
    E = inst.graph.num_edges
    if not 0 <= n <= E:
        raise ValueError(f"coefficient index {n} outside 0..{E}")
    count = len(primitive_pseudo_orbits(q, n))
    mc_estimate = mc_std_error = None
    if samples > 0:
        mc_estimate, mc_std_error = monte_carlo_variance(inst, n, samples, k_max, seed)
    return VarianceReport(
        q=q,
        m=m,
        n=n,
        seed=seed,
        samples=samples,
        pseudo_orbit_count=count,
        diag=diagonal_variance(q, n),
        exact_grouped=exact_grouped_variance(inst, n),
        cue_ref=rmt_reference("CUE", n, E),
        coe_ref=rmt_reference("COE", n, E),
        mc_estimate=mc_estimate,
        mc_std_error=mc_std_error,
        k_max=k_max if samples > 0 else None,
    )
