"""Digraph energy: total (trace-norm) energy, per-vertex outer/inner
energies, edge energy, and the adjacent-vertex and degree-bound checks.

The outer energy of vertex v is the v-th diagonal entry of (A A^T)^(1/2);
the inner energy comes from (A^T A)^(1/2).  Either diagonal sums to the
total energy, which also equals the sum of the singular values of A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .densela import adjacency, gram_in, gram_out, psd_sqrt, singular_values
from .digraph import Digraph, degree_profile
from .errors import NoSuchArcError

# Absolute slack beyond which a proved inequality counts as violated;
# entries are 0/1 integers so conditioning at desk scale is benign.
THEOREM_TOL = 1e-9


@dataclass(frozen=True)
class EnergyReport:
    """Singular values, total energy, and both per-vertex energy vectors."""

    sigma: np.ndarray
    total: float
    vertex_out: np.ndarray
    vertex_in: np.ndarray


@dataclass(frozen=True)
class PairCheck:
    """Product/sum of outer and inner energy across one arc (v, w)."""

    arc: tuple[int, int]
    product: float
    sum: float
    violation: bool


@dataclass(frozen=True)
class VertexBoundCheck:
    """Vertex energies against the square roots of the matching degrees."""

    vertex: int
    out_energy: float
    out_bound: float
    out_slack: float
    in_energy: float
    in_bound: float
    in_slack: float
    violation: bool


@lru_cache(maxsize=1024)
def _report(G: Digraph) -> EnergyReport:
    A = adjacency(G)
    sigma = singular_values(A)
    vertex_out = np.maximum(np.diag(psd_sqrt(gram_out(A))), 0.0)
    vertex_in = np.maximum(np.diag(psd_sqrt(gram_in(A))), 0.0)
    for arr in (sigma, vertex_out, vertex_in):
        arr.setflags(write=False)
    return EnergyReport(sigma, float(sigma.sum()), vertex_out, vertex_in)


def energy_report(G: Digraph) -> EnergyReport:
    """Full energy report of a digraph (cached; arrays are read-only)."""
    return _report(G)


def edge_energy(G: Digraph, arc: tuple[int, int]) -> float:
    """E+(v)/d+(v) + E-(w)/d-(w) for an arc (v, w) of G.

    Summed over all arcs this gives exactly twice the total energy.
    """
    v, w = arc
    if not G.has_arc(v, w):
        raise NoSuchArcError(f"arc ({v}, {w}) not present")
    rep = energy_report(G)
    deg = degree_profile(G)
    return float(rep.vertex_out[v] / deg.out_deg[v] + rep.vertex_in[w] / deg.in_deg[w])


def adjacent_pair_check(G: Digraph) -> list[PairCheck]:
    """Per arc (v, w): the product and sum of E+(v) and E-(w).

    For arcs of a simple digraph the product is at least 1 and the sum at
    least 2; a record is flagged when either drops below by more than 1e-9.
    """
    rep = energy_report(G)
    checks = []
    for v, w in G.arcs:
        product = float(rep.vertex_out[v] * rep.vertex_in[w])
        pair_sum = float(rep.vertex_out[v] + rep.vertex_in[w])
        bad = product < 1.0 - THEOREM_TOL or pair_sum < 2.0 - THEOREM_TOL
        checks.append(PairCheck((v, w), product, pair_sum, bad))
    return checks


def vertex_degree_bound_check(G: Digraph) -> list[VertexBoundCheck]:
    """Per vertex: E+(v) against sqrt(d+(v)) and E-(v) against sqrt(d-(v))."""
    rep = energy_report(G)
    deg = degree_profile(G)
    checks = []
    for v in range(G.n):
        out_bound = math.sqrt(deg.out_deg[v])
        in_bound = math.sqrt(deg.in_deg[v])
        out_slack = out_bound - float(rep.vertex_out[v])
        in_slack = in_bound - float(rep.vertex_in[v])
        checks.append(
            VertexBoundCheck(
                vertex=v,
                out_energy=float(rep.vertex_out[v]),
                out_bound=out_bound,
                out_slack=out_slack,
                in_energy=float(rep.vertex_in[v]),
                in_bound=in_bound,
                in_slack=in_slack,
                violation=out_slack < -THEOREM_TOL or in_slack < -THEOREM_TOL,
            )
        )
    return checks


def mcclelland_bound(G: Digraph) -> tuple[float, float, float]:
    """The chain bounds (sum sqrt d+, sum sqrt d-, sqrt(a*n)).

    The energy never exceeds either degree sum, and neither degree sum
    exceeds sqrt(arc_count * n).
    """
    deg = degree_profile(G)
    out_sum = float(sum(math.sqrt(d) for d in deg.out_deg))
    in_sum = float(sum(math.sqrt(d) for d in deg.in_deg))
    return out_sum, in_sum, math.sqrt(deg.arc_count * G.n)
