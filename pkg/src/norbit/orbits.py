"""Nilpotent orbits of the classical Lie algebras, keyed by Jordan type.

Type A of rank n means gl(n+1); B, C, D of rank n mean so(2n+1), sp(2n)
and so(2n). Rank 0 is allowed so that residual factors of Levi subalgebras
(so(1), sp(0), so(0)) can serve as induction bases.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .partitions import (
    TYPES,
    Partition,
    PartitionError,
    add_box_largest,
    as_partition,
    collapse,
    dominates,
    is_valid,
    parity_ok,
    partitions_of,
    remove_box_largest,
    transpose,
    type_size,
)

LABELS = ("I", "II")
STABLY_TRIVIAL_MODES = ("literal", "parity-parallel")
DEFAULT_SEARCH_RANK = 6


class OrbitError(ValueError):
    pass


class BoundExceeded(OrbitError):
    """A bounded exhaustive search was asked to go past its bound."""


def is_very_even(t: str, p) -> bool:
    p = as_partition(p)
    return t == "D" and len(p) > 0 and all(x % 2 == 0 for x in p)


@dataclass(frozen=True, order=True)
class OrbitDescriptor:
    type: str
    rank: int
    partition: Partition
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "partition", as_partition(self.partition))
        if self.type not in TYPES:
            raise OrbitError(f"unknown type {self.type!r}")
        if self.rank < 0:
            raise OrbitError("rank must be nonnegative")
        if not is_valid(self.type, self.rank, self.partition):
            raise OrbitError(
                f"{self.partition} is not a type {self.type} partition of "
                f"{type_size(self.type, self.rank)}"
            )
        if is_very_even(self.type, self.partition):
            if self.label not in LABELS:
                raise OrbitError(f"very even partition {self.partition} needs label I or II")
        elif self.label is not None:
            raise OrbitError("labels are only for very even type D partitions")

    @property
    def very_even(self) -> bool:
        return is_very_even(self.type, self.partition)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "rank": self.rank,
            "partition": list(self.partition),
            "label": self.label,
        }

    @classmethod
    def from_json(cls, d: dict) -> "OrbitDescriptor":
        return cls(d["type"], int(d["rank"]), Partition(d["partition"]), d.get("label"))

    def __str__(self) -> str:
        tail = f" {self.label}" if self.label else ""
        return f"{self.type}{self.rank}({self.partition or '0'}){tail}"


def orbit(t: str, n: int, p, label: str | None = None) -> OrbitDescriptor:
    return OrbitDescriptor(t, n, as_partition(p), label)


def zero_orbit(t: str, n: int) -> OrbitDescriptor:
    size = type_size(t, n)
    return orbit(t, n, [1] * size, "I" if is_very_even(t, [1] * size) else None)


def principal_orbit(t: str, n: int) -> OrbitDescriptor:
    size = type_size(t, n)
    if t == "D" and n >= 1:
        return orbit(t, n, [2 * n - 1, 1])
    return orbit(t, n, [size] if size else [])


@dataclass(frozen=True)
class LeviShape:
    """gl blocks plus the rank of the residual classical factor.

    For type A the residual rank is 0 and the blocks fill gl(n+1). For very
    even type D results, ``label`` records which of the two conjugacy classes
    of Levi subalgebras was used.
    """

    gl_blocks: tuple[int, ...]
    residual_rank: int = 0
    label: str | None = None
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        blocks = tuple(sorted((int(k) for k in self.gl_blocks), reverse=True))
        if any(k <= 0 for k in blocks):
            raise OrbitError("gl blocks must be positive")
        if self.residual_rank < 0:
            raise OrbitError("residual rank must be nonnegative")
        object.__setattr__(self, "gl_blocks", blocks)

    def ambient_rank(self, t: str) -> int:
        return sum(self.gl_blocks) - 1 if t == "A" else sum(self.gl_blocks) + self.residual_rank

    def to_json(self) -> dict:
        return {
            "gl_blocks": list(self.gl_blocks),
            "residual_rank": self.residual_rank,
            "label": self.label,
            **self.metadata,
        }


# enumeration and closure order ---------------------------------------------


def enumerate_orbits(t: str, n: int) -> list[OrbitDescriptor]:
    """All orbits, largest first. Very even partitions appear as I then II."""
    out = []
    for p in partitions_of(type_size(t, n)):
        if not parity_ok(t, p):
            continue
        if is_very_even(t, p):
            out.extend(orbit(t, n, p, lab) for lab in LABELS)
        else:
            out.append(orbit(t, n, p))
    return out


def closure_leq(a: OrbitDescriptor, b: OrbitDescriptor) -> bool:
    """True when ``a`` lies in the closure of ``b``."""
    if (a.type, a.rank) != (b.type, b.rank):
        raise OrbitError("orbits live in different Lie algebras")
    if a.partition == b.partition:
        return a.label == b.label
    return dominates(b.partition, a.partition)


def hasse_edges(t: str, n: int) -> list[tuple[OrbitDescriptor, OrbitDescriptor]]:
    """Covering pairs (upper, lower) of the closure order."""
    orbs = enumerate_orbits(t, n)
    below = {
        o: [q for q in orbs if q != o and closure_leq(q, o)] for o in orbs
    }
    edges = []
    for o in orbs:
        for q in below[o]:
            if not any(q in below[r] for r in below[o]):
                edges.append((o, q))
    return edges


# duality and Dynkin data ----------------------------------------------------


def is_special(o: OrbitDescriptor) -> bool:
    tp = transpose(o.partition)
    if o.type == "A":
        return True
    if o.type == "B":
        return parity_ok("B", tp)
    # C and D orbits are special when the transpose is a C-partition
    return parity_ok("C", tp)


def _dual_label(o: OrbitDescriptor, q: Partition) -> str | None:
    if not is_very_even("D", q):
        return None
    if not o.very_even:
        return "I"
    # labels are preserved when 4 | n and exchanged when n = 2 mod 4
    if o.rank % 4 == 0:
        return o.label
    return "II" if o.label == "I" else "I"


def bv_dual(o: OrbitDescriptor) -> OrbitDescriptor:
    p = o.partition
    if o.type == "A":
        return orbit("A", o.rank, transpose(p))
    if o.type == "B":
        return orbit("C", o.rank, collapse("C", transpose(remove_box_largest(p))))
    if o.type == "C":
        return orbit("B", o.rank, collapse("B", add_box_largest(transpose(p))))
    q = collapse("D", transpose(p))
    return orbit("D", o.rank, q, _dual_label(o, q))


def dynkin_h(o: OrbitDescriptor) -> tuple[int, ...]:
    """Dominant representative of the neutral element of an sl2-triple.

    Type A returns all n+1 gl coordinates. For B, C, D the nonnegative
    half of the eigenvalue multiset is kept; a label II very even orbit
    has its last coordinate negated.
    """
    eig = sorted((x for p in o.partition for x in range(p - 1, -p, -2)), reverse=True)
    if o.type == "A":
        return tuple(eig)
    h = list(eig[: o.rank])
    if o.label == "II":
        h[-1] = -h[-1]
    return tuple(h)


def simple_root_labels(t: str, h) -> tuple:
    h = list(h)
    diffs = [a - b for a, b in zip(h, h[1:])]
    if not h or t == "A":
        return tuple(diffs)
    if t == "B":
        diffs.append(h[-1])
    elif t == "C":
        diffs.append(2 * h[-1])
    elif len(h) >= 2:
        diffs.append(h[-2] + h[-1])
    return tuple(diffs)


def is_even(o: OrbitDescriptor) -> bool:
    return all(x % 2 == 0 for x in simple_root_labels(o.type, dynkin_h(o)))


def component_group_order(o: OrbitDescriptor) -> int:
    """Order of A(O) for the adjoint group."""
    if o.type == "A" or o.very_even:
        return 1
    parts = set(o.partition)
    if o.type == "C":
        return 2 ** sum(1 for x in parts if x % 2 == 0)
    odd = sum(1 for x in parts if x % 2 == 1)
    return 2 ** max(0, odd - 1)


def is_stably_trivial(o: OrbitDescriptor, mode: str = "literal") -> bool:
    if mode not in STABLY_TRIVIAL_MODES:
        raise OrbitError(f"unknown mode {mode!r}")
    mult = o.partition.multiplicities()
    if o.type == "A":
        return True
    if o.type == "C" or (o.type == "D" and mode == "literal"):
        return all(m % 2 == 0 for x, m in mult.items() if x % 2 == 0)
    odd = [x for x in mult if x % 2 == 1]
    top = max(odd, default=None)
    return all(mult[x] % 2 == 0 for x in odd if x != top)


# triangular families ---------------------------------------------------------


def triangular_partition(t: str, m: int) -> Partition:
    if m < 1:
        raise OrbitError("triangular families start at m = 1")
    if t == "B":
        return Partition([2 * m + 1] + [x for k in range(m - 1, -1, -1) for x in (2 * k + 1,) * 2])
    if t == "C":
        return Partition([x for k in range(m, 0, -1) for x in (2 * k,) * 2])
    if t == "D":
        return Partition([x for k in range(m - 1, -1, -1) for x in (2 * k + 1,) * 2])
    raise OrbitError(f"no triangular family in type {t}")


def triangular_rank(t: str, m: int) -> int:
    return {"B": m * m + m, "C": m * (m + 1), "D": m * m}[t]


def triangular_index(o: OrbitDescriptor) -> int | None:
    """The m with o in the triangular family, or None."""
    if o.type not in "BCD" or not o.partition:
        return None
    m = {"B": (o.partition[0] - 1) // 2, "C": o.partition[0] // 2, "D": (o.partition[0] + 1) // 2}[o.type]
    if m >= 1 and triangular_partition(o.type, m) == o.partition:
        return m
    return None


def is_triangular(o: OrbitDescriptor) -> bool:
    return triangular_index(o) is not None


def triangular_levi(o: OrbitDescriptor) -> LeviShape:
    m = triangular_index(o)
    if m is None:
        raise OrbitError(f"{o} is not triangular")
    if o.type == "B":
        blocks, res = [2 * k for k in range(1, m + 1)], 0
    elif o.type == "C":
        blocks, res = [2 * k - 1 for k in range(1, m + 1)], m
    else:
        blocks, res = [2 * k for k in range(1, m)], m
    return LeviShape(tuple(blocks), res, metadata={"ap_trivial": True, "family_m": m})


# induction -------------------------------------------------------------------


def _base_check(t: str, base: OrbitDescriptor | None, n: int, total: int) -> None:
    if t == "A":
        if base is not None:
            raise OrbitError("type A induction has no residual factor")
        if total != n + 1:
            raise OrbitError(f"blocks sum to {total}, need {n + 1}")
        return
    if base is None or base.type != t:
        raise OrbitError(f"need a type {t} base orbit")
    if base.rank + total != n:
        raise OrbitError(f"rank mismatch: {base.rank} + {total} != {n}")


def _induced_label(t: str, base, q: Partition, levi_label: str) -> str | None:
    if not is_very_even(t, q):
        return None
    if base is not None and base.very_even:
        return base.label
    return levi_label


def induce_general(t, n, base, gl_orbits, levi_label: str = "I") -> OrbitDescriptor:
    """Induce ``base`` times the given gl orbits up to rank ``n``.

    The gl data add coordinatewise; the result is base + 2q collapsed.
    ``levi_label`` only matters when a very even orbit arises from a base
    that is not itself very even.
    """
    gl = [as_partition(g) for g in gl_orbits]
    _base_check(t, base, n, sum(g.size for g in gl))
    width = max((len(g) for g in gl), default=0)
    q = [sum(g.padded(width)[j] for g in gl) for j in range(width)]
    if t == "A":
        return orbit("A", n, Partition(q))
    rows = base.partition.padded(max(width, len(base.partition)))
    rows = [r + 2 * (q[j] if j < width else 0) for j, r in enumerate(rows)]
    res = collapse(t, Partition(rows))
    return orbit(t, n, res, _induced_label(t, base, res, levi_label))


def induce(t, n, base, blocks, levi_label: str = "I") -> OrbitDescriptor:
    """Induce from the zero orbit on gl blocks times ``base``."""
    return induce_general(t, n, base, [[1] * int(k) for k in blocks], levi_label)


def _base_orbits(t: str, r: int) -> list[OrbitDescriptor]:
    return enumerate_orbits(t, r)


def inducing_presentations(o: OrbitDescriptor, bound: int = DEFAULT_SEARCH_RANK):
    """Every way of inducing ``o`` from a maximal Levi gl(k) + g(n-k).

    Returns a list of (LeviShape, gl_orbits, base); for type A the second
    gl factor plays the role of the base and is listed in gl_orbits.
    """
    if o.rank > bound:
        raise BoundExceeded(f"rank {o.rank} exceeds search bound {bound}")
    out = []
    t, n = o.type, o.rank
    if t == "A":
        size = n + 1
        for k in range(1, size // 2 + 1):
            for lam in partitions_of(k):
                for mu in partitions_of(size - k):
                    if induce_general("A", n, None, [lam, mu]) == o:
                        out.append((LeviShape((k, size - k)), [lam, mu], None))
        return out
    for k in range(1, n + 1):
        for base in _base_orbits(t, n - k):
            for lam in partitions_of(k):
                for lab in (LABELS if t == "D" else (None,)):
                    res = induce_general(t, n, base, [lam], lab or "I")
                    if res.partition != o.partition or res.label != o.label:
                        continue
                    used = lab if (res.very_even and not base.very_even) else None
                    shape = LeviShape((k,), n - k, used)
                    if (shape, [lam], base) not in out:
                        out.append((shape, [lam], base))
    return out


def is_cuspidal(o: OrbitDescriptor, bound: int = DEFAULT_SEARCH_RANK) -> bool:
    return not inducing_presentations(o, bound)


def richardson_presentations(o: OrbitDescriptor, bound: int = DEFAULT_SEARCH_RANK):
    """Presentations with every gl orbit zero."""
    return [pr for pr in inducing_presentations(o, bound) if all(len(g) == g.size for g in pr[1])]


def check_staging(t: str, n: int, base: OrbitDescriptor, blocks) -> bool:
    """All single-block staging orders agree with the one-shot induction."""
    target = induce(t, n, base, blocks)
    for order in set(permutations(blocks)):
        cur, r = base, base.rank
        for k in order:
            r += k
            cur = induce(t, r, cur, [k])
        if cur != target:
            return False
    return True


@dataclass(frozen=True)
class Completion:
    blocks: tuple[int, ...] | None
    orbit: OrbitDescriptor | None
    searched: int
    bound: int

    @property
    def found(self) -> bool:
        return self.orbit is not None

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "blocks": list(self.blocks) if self.blocks is not None else None,
            "orbit": self.orbit.to_json() if self.orbit else None,
            "searched": self.searched,
            "bound": self.bound,
        }


def _block_multisets(total: int) -> Iterator[tuple[int, ...]]:
    yield from sorted(tuple(sorted(p)) for p in partitions_of(total))


def complete_to_triangular(
    o: OrbitDescriptor, search_bound: int = 12, mode: str = "literal"
) -> Completion:
    """Smallest gl block multiset inducing ``o`` to a triangular orbit.

    Candidates are ordered by total size, then lexicographically as
    ascending tuples. A miss is reported, not raised.
    """
    if o.type == "A":
        raise OrbitError("triangular completion is only defined for B, C, D")
    if not is_stably_trivial(o, mode):
        raise OrbitError(f"{o} is not stably trivial ({mode})")
    searched = 0
    for total in range(0, search_bound + 1):
        for blocks in _block_multisets(total):
            searched += 1
            res = induce(o.type, o.rank + total, o, blocks)
            if is_triangular(res):
                return Completion(blocks, res, searched, search_bound)
    return Completion(None, None, searched, search_bound)


def parse_orbit(t: str, n: int, text: str, label: str | None = None) -> OrbitDescriptor:
    try:
        p = Partition.parse(text)
    except PartitionError as exc:
        raise OrbitError(str(exc)) from None
    return orbit(t.upper(), int(n), p, label)
