"""Finite-dimensional characters of classical Lie algebras.

Weights live in the orthonormal e-basis. Type A of rank n uses the n+1
coordinates of gl(n+1), so a dominant weight is any weakly decreasing
integer vector. Internally coordinates are doubled to stay in integers.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .orbits import LeviShape

DEFAULT_DIM_BOUND = 20000


class WeightError(ValueError):
    pass


class DimensionBoundExceeded(WeightError):
    pass


Weight = tuple  # of Fractions


def as_weight(v) -> Weight:
    return tuple(Fraction(x) for x in v)


def _dbl(v) -> tuple[int, ...]:
    out = []
    for x in v:
        y = 2 * Fraction(x)
        if y.denominator != 1:
            raise WeightError(f"coordinate {x} is not in (1/2)Z")
        out.append(int(y))
    return tuple(out)


def _half(v) -> Weight:
    return tuple(Fraction(x, 2) for x in v)


def _unit(dim, i, s=1):
    v = [0] * dim
    v[i] = s
    return v


def _add(u, v, k=1):
    return tuple(a + k * b for a, b in zip(u, v))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class RootSystem:
    """Classical root system in the e-basis.

    ``RootSystem("A", n)`` is gl(n+1); B, C, D of rank n are so(2n+1),
    sp(2n), so(2n). Rank 0 (and D of rank 1) give root systems with no
    roots, which is what residual factors of Levi subalgebras need.
    """

    def __init__(self, t: str, n: int):
        if t not in "ABCD" or len(t) != 1 or n < 0:
            raise WeightError(f"bad root system {t}{n}")
        self.type, self.rank = t, n
        d = n + 1 if t == "A" else n
        self.dim = d
        pos: list[tuple[int, ...]] = []
        for i in range(d):
            for j in range(i + 1, d):
                e = _unit(d, i)
                pos.append(_add(e, _unit(d, j, -1)))
                if t != "A":
                    pos.append(_add(e, _unit(d, j)))
        if t == "B":
            pos += [tuple(_unit(d, i)) for i in range(d)]
        if t == "C":
            pos += [tuple(_unit(d, i, 2)) for i in range(d)]
        self._pos2 = [tuple(2 * x for x in a) for a in pos]
        self.positive_roots = [as_weight(a) for a in pos]
        simple = [_add(_unit(d, i), _unit(d, i + 1, -1)) for i in range(d - 1)]
        if t == "B" and n:
            simple.append(tuple(_unit(d, n - 1)))
        elif t == "C" and n:
            simple.append(tuple(_unit(d, n - 1, 2)))
        elif t == "D" and n >= 2:
            simple.append(_add(_unit(d, n - 2), _unit(d, n - 1)))
        elif t == "D" and n == 1:
            simple = []
        self.simple_roots = [as_weight(a) for a in simple]
        self._simple2 = [tuple(2 * x for x in a) for a in simple]
        self.rho = tuple(sum((a[i] for a in self.positive_roots), Fraction(0)) / 2 for i in range(d))
        self._rho2 = _dbl(self.rho)

    @property
    def fundamental_weights(self) -> list[Weight]:
        d, n, t = self.dim, self.rank, self.type
        if t == "A":
            return [as_weight([1] * i + [0] * (d - i)) for i in range(1, n + 1)]
        ws = [as_weight([1] * i + [0] * (d - i)) for i in range(1, n + 1)]
        h = Fraction(1, 2)
        if t == "B" and n:
            ws[-1] = tuple([h] * n)
        if t == "D" and n >= 2:
            ws[-2] = tuple([h] * (n - 1) + [-h])
            ws[-1] = tuple([h] * n)
        if t == "D" and n == 1:
            ws = []
        return ws

    @property
    def weyl_order(self) -> int:
        n, t = self.rank, self.type
        if t == "A":
            return factorial(n + 1)
        if t in "BC":
            return 2**n * factorial(n)
        return 2 ** (n - 1) * factorial(n) if n else 1

    def __repr__(self):
        return f"RootSystem({self.type!r}, {self.rank})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.type, self.rank) == (other.type, other.rank)

    def __hash__(self):
        return hash((self.type, self.rank))

    # dominance --------------------------------------------------------------

    def is_dominant_integral(self, lam) -> bool:
        try:
            v = _dbl(lam)
        except WeightError:
            return False
        if len(v) != self.dim:
            return False
        t = self.type
        if t == "C":
            if any(x % 2 for x in v):
                return False
        elif len({x % 2 for x in v}) > 1:
            # gl blocks inside spin groups may carry a half-integral determinant
            return False
        if any(a < b for a, b in zip(v, v[1:-1] if t == "D" else v[1:])):
            return False
        if t in "BC" and v and v[-1] < 0:
            return False
        if t == "D" and len(v) >= 2 and v[-2] < abs(v[-1]):
            return False
        return True

    def _dominant2(self, v):
        if self.type == "A":
            return tuple(sorted(v, reverse=True))
        out = sorted((abs(x) for x in v), reverse=True)
        if self.type == "D" and out and all(x != 0 for x in v) and sum(x < 0 for x in v) % 2:
            out[-1] = -out[-1]
        return tuple(out)

    def dominant_conjugate(self, lam) -> Weight:
        return _half(self._dominant2(_dbl(lam)))

    def _in_root_cone2(self, v) -> bool:
        """v (doubled) is a nonnegative integer combination of simple roots."""
        t, n = self.type, self.rank
        s, acc = [], 0
        for x in v:
            acc += x
            s.append(acc)
        if t == "A":
            coeffs = s[:-1]
            if s and s[-1] != 0:
                return False
        elif t == "B":
            coeffs = s
        elif t == "C":
            coeffs = s[:-1] + ([Fraction(s[-1], 2)] if s else [])
        elif n >= 2:
            coeffs = s[:-2] + [Fraction(s[-2] - v[-1], 2), Fraction(s[-2] + v[-1], 2)]
        else:
            coeffs = []
            if any(v):
                return False
        # doubled coordinates: true coefficients are half of these
        return all(c >= 0 and Fraction(c) % 2 == 0 for c in coeffs)

    def height(self, mu) -> Fraction:
        return _dot(as_weight(mu), self.rho)


@lru_cache(maxsize=None)
def root_system(t: str, n: int) -> RootSystem:
    return RootSystem(t, n)


def weyl_dim(rs: RootSystem, lam) -> int:
    if not rs.is_dominant_integral(lam):
        raise WeightError(f"{tuple(map(str, as_weight(lam)))} is not dominant integral for {rs}")
    v = _dbl(lam)
    num = den = 1
    for a in rs._pos2:
        num *= _dot(_add(v, rs._rho2), a)
        den *= _dot(rs._rho2, a)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


@dataclass(frozen=True)
class WeightDiagram:
    root_system: RootSystem
    highest: Weight
    mults: dict

    @property
    def dimension(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, mu) -> int:
        return self.mults.get(as_weight(mu), 0)

    def items(self):
        return self.mults.items()


@lru_cache(maxsize=None)
def _diagram2(t: str, n: int, lam2: tuple[int, ...]) -> tuple:
    rs = root_system(t, n)
    simple, pos = rs._simple2, rs._pos2
    lr = _add(lam2, rs._rho2)
    top = _dot(lr, lr)
    mults = {lam2: 1}
    level = [lam2]
    while level:
        nxt = []
        seen = set()
        for w in level:
            for a in simple:
                mu = _add(w, a, -1)
                if mu in seen or mu in mults:
                    continue
                seen.add(mu)
                dom = rs._dominant2(mu)
                if not rs._in_root_cone2(_add(lam2, dom, -1)):
                    continue
                acc = 0
                for b in pos:
                    k = 1
                    while True:
                        nu = _add(mu, b, k)
                        m = mults.get(nu)
                        if not m:
                            break
                        acc += m * _dot(nu, b)
                        k += 1
                mr = _add(mu, rs._rho2)
                den = top - _dot(mr, mr)
                m, r = divmod(2 * acc, den)
                if r:
                    raise WeightError(f"Freudenthal produced a non-integer at {mu}")
                if m > 0:
                    mults[mu] = m
                    nxt.append(mu)
        level = nxt
    return tuple(mults.items())


def weight_multiplicities(rs: RootSystem, lam, bound: int = DEFAULT_DIM_BOUND) -> WeightDiagram:
    """Full weight diagram of the irreducible with highest weight ``lam``
    by Freudenthal's recursion, processed level by level from the top."""
    dim = weyl_dim(rs, lam)
    if dim > bound:
        raise DimensionBoundExceeded(f"dimension {dim} exceeds bound {bound}")
    items = _diagram2(rs.type, rs.rank, _dbl(lam))
    return WeightDiagram(rs, as_weight(lam), {_half(k): m for k, m in items})


# Levi branching --------------------------------------------------------------


def _levi_factors(rs: RootSystem, levi: LeviShape):
    """(coordinate slice, root system) for each simple factor of the Levi."""
    out, start = [], 0
    for k in levi.gl_blocks:
        out.append((slice(start, start + k), root_system("A", k - 1)))
        start += k
    if rs.type != "A":
        out.append((slice(start, start + levi.residual_rank), root_system(rs.type, levi.residual_rank)))
        start += levi.residual_rank
    if start != rs.dim:
        raise WeightError(f"{levi} does not fit {rs}")
    return out


def _levi_diagram2(factors, nu2):
    parts = []
    for sl, frs in factors:
        if frs.dim == 0:
            parts.append((((), 1),))
        else:
            parts.append(_diagram2(frs.type, frs.rank, nu2[sl]))
    diag: dict = {}
    for combo in product(*parts):
        w = tuple(x for wt, _ in combo for x in wt)
        m = 1
        for _, c in combo:
            m *= c
        diag[w] = diag.get(w, 0) + m
    return diag


@lru_cache(maxsize=None)
def _branch2(t, n, lam2, blocks, residual):
    rs = root_system(t, n)
    factors = _levi_factors(rs, LeviShape(blocks, residual))
    remaining = dict(_diagram2(t, n, lam2))
    order = sorted(remaining, key=lambda w: (_dot(w, rs._rho2), w), reverse=True)
    out = []
    for top in order:
        c = remaining.get(top, 0)
        if c < 0:
            raise WeightError("branching produced a negative multiplicity")
        if not c:
            continue
        if not all(frs.is_dominant_integral(_half(top[sl])) for sl, frs in factors):
            raise WeightError(f"peeled weight {_half(top)} is not Levi-dominant")
        for w, m in _levi_diagram2(factors, top).items():
            left = remaining.get(w, 0) - c * m
            if left < 0:
                raise WeightError("branching produced a negative multiplicity")
            remaining[w] = left
        out.append((top, c))
    if any(remaining.values()):
        raise WeightError("branching left a remainder")
    return tuple(out)


def branch_to_levi(rs: RootSystem, lam, levi: LeviShape, bound: int = DEFAULT_DIM_BOUND):
    """Decompose the restriction to a block Levi.

    Returns (Levi highest weight, multiplicity) pairs, found by repeatedly
    taking the highest remaining weight (by height, then lexicographically)
    and subtracting the Levi irreducible it generates.
    """
    dim = weyl_dim(rs, lam)
    if dim > bound:
        raise DimensionBoundExceeded(f"dimension {dim} exceeds bound {bound}")
    _levi_factors(rs, levi)
    got = _branch2(rs.type, rs.rank, _dbl(lam), levi.gl_blocks, levi.residual_rank)
    return [(_half(w), c) for w, c in got]


def trivial_multiplicity(rs: RootSystem, lam, levi: LeviShape, bound: int = DEFAULT_DIM_BOUND) -> int:
    """[V_lam restricted to the Levi : trivial] = [V_lam : Ind(triv)]."""
    zero = tuple(Fraction(0) for _ in range(rs.dim))
    return dict(branch_to_levi(rs, lam, levi, bound)).get(zero, 0)


def levi_dimension(rs: RootSystem, levi: LeviShape, nu, bound: int = DEFAULT_DIM_BOUND) -> int:
    d = 1
    for sl, frs in _levi_factors(rs, levi):
        if frs.dim:
            d *= weyl_dim(frs, as_weight(nu)[sl])
    return d


def dominant_weights(rs: RootSystem, max_dim: int, center_zero: bool = True):
    """Dominant integral weights with Weyl dimension at most ``max_dim``.

    Walks by fundamental weights, along which the dimension never drops, so
    pruning at the bound loses nothing. For type A with ``center_zero`` only
    weights with coordinate sum zero are kept.
    """
    zero = tuple(Fraction(0) for _ in range(rs.dim))
    steps = rs.fundamental_weights
    found, frontier = set(), [zero]
    while frontier:
        w = frontier.pop()
        if w in found or weyl_dim(rs, w) > max_dim:
            continue
        found.add(w)
        frontier.extend(tuple(a + b for a, b in zip(w, s)) for s in steps)
    if rs.type == "A" and center_zero:
        d = rs.dim
        found = {
            tuple(x - sum(w) / d for x in w) for w in found if sum(w) % d == 0
        }
    return sorted(found, key=lambda w: (weyl_dim(rs, w), w))
