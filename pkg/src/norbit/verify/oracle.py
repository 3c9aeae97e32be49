"""Numeric Hilbert-function oracle for nilpotent orbit closures.

The degree-d part of the coordinate ring of the closure of O is the span of
degree-d monomials in linear coordinates, restricted to O. Its dimension is
the rank of the matrix of those monomials evaluated at many random points
g.e.g^-1 of O. Monomials are torus weight vectors, so ranks of weight blocks
give the graded character, which is then split into irreducibles.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import numpy as np
from scipy.linalg import expm, schur

from ..orbits import OrbitDescriptor
from ..weights import root_system, weight_multiplicities, weyl_dim

MAX_MONOMIALS = 6000


class OracleError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    """Sampling parameters. ``sample_count=None`` means monomial count + 32."""

    degree: int = 3
    sample_count: int | None = None
    tolerance: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.tolerance <= 1e-4:
            raise ValueError("tolerance must lie in (0, 1e-4]")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if self.sample_count is not None and self.sample_count < 1:
            raise ValueError("sample_count must be positive")

    def samples_for(self, n_monomials: int) -> int:
        if self.sample_count is None:
            return n_monomials + 32
        if self.sample_count < n_monomials:
            raise OracleError(
                f"sample_count {self.sample_count} is below the monomial count {n_monomials}"
            )
        return self.sample_count


# realizations ----------------------------------------------------------------


def _jordan(sizes) -> np.ndarray:
    n = sum(sizes)
    e = np.zeros((n, n))
    start = 0
    for p in sizes:
        for i in range(p - 1):
            e[start + i, start + i + 1] = 1.0
        start += p
    return e


def _standard_form(t: str, N: int) -> np.ndarray:
    J = np.fliplr(np.eye(N))
    if t == "C":
        h = N // 2
        J[h:, :] *= -1
    return J


def _block_model(t: str, parts):
    """Nilpotent E and invariant form F built block by block.

    Parts of the free parity carry their own form; the others come in
    equal pairs V + V* with the pairing form.
    """
    eps = -1 if t == "C" else 1
    mult = Counter(parts)
    blocks = []
    for p in sorted(mult, reverse=True):
        m = mult[p]
        own = (p % 2 == 1) if eps == 1 else (p % 2 == 0)
        if own:
            blocks += [("own", p)] * m
        else:
            blocks += [("pair", p)] * (m // 2)
    N = sum(parts)
    E = np.zeros((N, N))
    F = np.zeros((N, N))
    s = 0
    for kind, p in blocks:
        if kind == "own":
            for i in range(p - 1):
                E[s + i + 1, s + i] = 1.0
            for i in range(p):
                F[s + i, s + p - 1 - i] = (-1) ** i
            s += p
        else:
            for i in range(p - 1):
                E[s + i + 1, s + i] = 1.0
                E[s + p + i + 1, s + p + i] = 1.0
            for i in range(p):
                F[s + i, s + p + p - 1 - i] = (-1) ** i
                F[s + p + p - 1 - i, s + i] = eps * (-1) ** i
            s += 2 * p
    return E, F


def _to_identity_symmetric(F):
    d, U = np.linalg.eigh(F)
    return U @ np.diag(1 / np.sqrt(d.astype(complex)))


def _to_darboux(F):
    """A with A^T F A the standard skew form with pairs (a, N-1-a)."""
    T, Z = schur(F, output="real")
    N = F.shape[0]
    cols = []
    k = 0
    while k < N:
        b = T[k, k + 1]
        u, v = Z[:, k], Z[:, k + 1]
        if b < 0:
            u, v, b = v, u, -b
        cols.append((u / np.sqrt(b), v / np.sqrt(b)))
        k += 2
    h = N // 2
    A = np.zeros((N, N))
    for j, (u, v) in enumerate(cols):
        A[:, j] = u
        A[:, N - 1 - j] = v
    return A


@dataclass
class Realization:
    """A linear model of g with a representative e of the orbit."""

    type: str
    rank: int
    e: np.ndarray
    coords: list  # matrix positions giving a basis of g*
    coord_weights: list  # torus weight of each coordinate function
    group_sampler: object = field(repr=False, default=None)

    @property
    def size(self) -> int:
        return self.e.shape[0]


def realize(o: OrbitDescriptor) -> Realization:
    t, parts = o.type, list(o.partition)
    N = sum(parts)
    if t == "A":
        e = _jordan(parts)
        coords = [(a, b) for a in range(N) for b in range(N)]
        basis = [tuple(1 if i == a else 0 for i in range(N)) for a in range(N)]
        weights = [tuple(x - y for x, y in zip(basis[b], basis[a])) for a, b in coords]

        def sampler(rng):
            while True:
                g = rng.uniform(-1, 1, size=(N, N))
                if np.linalg.cond(g) < 1e3:
                    return g

        return Realization(t, o.rank, e, coords, weights, sampler)

    n = o.rank
    J = _standard_form(t, N)
    E, F = _block_model(t, parts)
    if t == "C":
        A = _to_darboux(F) if N else np.zeros((0, 0))
        P = np.linalg.inv(A) if N else A
    else:
        A = _to_identity_symmetric(F) @ np.linalg.inv(_to_identity_symmetric(J))
        P = np.linalg.inv(A)
    e = P @ E @ np.linalg.inv(P) if N else E
    if t != "C":
        # complex congruence; drop round-off
        e = np.real_if_close(e, tol=1e6)
    w = []
    for a in range(N):
        v = [0] * n
        if a < n:
            v[a] = 1
        elif a >= N - n:
            v[N - 1 - a] = -1
        w.append(tuple(v))
    if t == "C":
        coords = [(a, b) for a in range(N) for b in range(N) if a + b <= N - 1]
    else:
        coords = [(a, b) for a in range(N) for b in range(N) if a + b < N - 1]
    weights = [tuple(x - y for x, y in zip(w[b], w[a])) for a, b in coords]

    def sampler(rng):
        Y = rng.uniform(-1, 1, size=(N, N))
        # project to the Lie algebra: X with X^T J + J X = 0
        Jinv = np.linalg.inv(J)
        X = 0.5 * (Y - Jinv @ Y.T @ J)
        return expm(X)

    return Realization(t, o.rank, e, coords, weights, sampler)


def check_realization(r: Realization) -> None:
    """Sanity checks used by tests: e lies in g and has the right Jordan type."""
    if r.type == "A":
        return
    J = _standard_form(r.type, r.size)
    resid = r.e.T @ J + J @ r.e
    if np.abs(resid).max() > 1e-8:
        raise OracleError("representative is not in the Lie algebra")


# sampling and ranks ----------------------------------------------------------


def _sample_points(r: Realization, count: int, rng) -> np.ndarray:
    rows = []
    idx = tuple(np.array(c) for c in zip(*r.coords)) if r.coords else None
    for _ in range(count):
        g = r.group_sampler(rng)
        X = g @ r.e @ np.linalg.inv(g)
        v = X[idx] if idx is not None else np.zeros(0)
        nv = np.linalg.norm(v)
        rows.append(v / nv if nv else v)
    return np.array(rows)


def _monomials(ncoords: int, d: int) -> np.ndarray:
    if d == 0:
        return np.zeros((1, 0), dtype=int)
    return np.array(list(combinations_with_replacement(range(ncoords), d)), dtype=int)


def _evaluate(points: np.ndarray, mons: np.ndarray) -> np.ndarray:
    out = np.ones((points.shape[0], mons.shape[0]), dtype=points.dtype)
    for k in range(mons.shape[1]):
        out = out * points[:, mons[:, k]]
    return out


def numeric_rank(M: np.ndarray, tol: float) -> int:
    if M.size == 0:
        return 0
    norms = np.linalg.norm(M, axis=0)
    keep = norms > 0
    if not keep.any():
        return 0
    M = M[:, keep] / norms[keep]
    s = np.linalg.svd(M, compute_uv=False)
    return int((s > tol * s[0]).sum())


@dataclass
class DegreeData:
    degree: int
    dimension: int
    weight_dims: dict
    decomposition: list  # (highest weight, multiplicity)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "decomposition": [
                {"highest_weight": [str(x) for x in hw], "multiplicity": m}
                for hw, m in self.decomposition
            ],
        }


def _degree_ranks(r: Realization, d: int, cfg: OracleConfig, seed: int):
    mons = _monomials(len(r.coords), d)
    if len(mons) > MAX_MONOMIALS:
        raise OracleError(f"{len(mons)} monomials at degree {d} is beyond desk scale")
    count = cfg.samples_for(len(mons))
    rng = np.random.default_rng(seed)
    pts = _sample_points(r, count, rng)
    M = _evaluate(pts, mons)
    total = numeric_rank(M, cfg.tolerance)
    wts = np.array(r.coord_weights, dtype=int).reshape(len(r.coords), -1)
    mw = wts[mons].sum(axis=1) if d else np.zeros((1, wts.shape[1]), dtype=int)
    groups: dict = {}
    for j, w in enumerate(map(tuple, mw)):
        groups.setdefault(w, []).append(j)
    per = {}
    for w, cols in groups.items():
        k = numeric_rank(M[:, cols], cfg.tolerance)
        if k:
            per[w] = k
    return total, per


def _seeds(cfg: OracleConfig):
    return cfg.seed, cfg.seed + 1


def hilbert_oracle(o: OrbitDescriptor, d: int, cfg: OracleConfig | None = None) -> int:
    """dim of the degree-d part of the coordinate ring of the closure of ``o``."""
    cfg = cfg or OracleConfig(degree=d)
    if o.type == "A" and (o.rank + 1 > 4 or d > 6):
        raise OracleError("type A oracle is limited to gl(n), n <= 4, and d <= 6")
    r = realize(o)
    ranks = [_degree_ranks(r, d, cfg, s)[0] for s in _seeds(cfg)]
    if ranks[0] != ranks[1]:
        raise OracleError(f"seed disagreement at degree {d}: {ranks}")
    return ranks[0]


def _peel(t: str, n: int, weight_dims: Counter):
    rs = root_system(t, n)
    remaining = Counter({tuple(Fraction(x) for x in w): m for w, m in weight_dims.items()})
    out = []
    while remaining:
        top = max(remaining, key=lambda w: (rs.height(w), w))
        c = remaining[top]
        if not rs.is_dominant_integral(top):
            raise OracleError(f"graded character has non-dominant top weight {top}")
        for w, m in weight_multiplicities(rs, top).items():
            left = remaining[w] - c * m
            if left < 0:
                raise OracleError(f"graded character is not a sum of irreducibles near {top}")
            if left:
                remaining[w] = left
            else:
                del remaining[w]
        out.append((top, c))
    return out


def graded_decomposition(o: OrbitDescriptor, cfg: OracleConfig) -> list[DegreeData]:
    """Degrees 0..cfg.degree, each split into irreducibles of g.

    Both seeds must agree on every weight-space dimension, and the weight
    spaces must add up to the full rank.
    """
    r = realize(o)
    out = []
    for d in range(cfg.degree + 1):
        runs = [_degree_ranks(r, d, cfg, s) for s in _seeds(cfg)]
        if runs[0] != runs[1]:
            raise OracleError(f"seed disagreement at degree {d}")
        total, per = runs[0]
        if sum(per.values()) != total:
            raise OracleError(f"weight spaces ({sum(per.values())}) do not add up to rank {total} at degree {d}")
        dec = _peel(o.type, o.rank, Counter(per))
        rs = root_system(o.type, o.rank)
        if sum(m * weyl_dim(rs, hw) for hw, m in dec) != total:
            raise OracleError(f"decomposition does not reassemble at degree {d}")
        out.append(DegreeData(d, total, per, dec))
    return out


def monomial_count(o: OrbitDescriptor, d: int) -> int:
    N = sum(o.partition)
    ncoords = {"A": N * N, "C": N * (N + 1) // 2}.get(o.type, N * (N - 1) // 2)
    return comb(ncoords + d - 1, d)
