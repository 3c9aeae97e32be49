"""Partition arithmetic: transpose, dominance, type validity and collapse."""
from __future__ import annotations

from collections import Counter
from functools import total_ordering
from typing import Iterable, Iterator

TYPES = ("A", "B", "C", "D")


class PartitionError(ValueError):
    """Raised for malformed partitions or impossible partition operations."""


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers.

    Zero parts are dropped on construction; the empty partition is allowed.
    Instances are immutable and hashable. Ordering is lexicographic on parts,
    which refines dominance for partitions of equal size.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = []
        for x in parts:
            if isinstance(x, bool) or int(x) != x:
                raise PartitionError(f"non-integer part {x!r}")
            x = int(x)
            if x < 0:
                raise PartitionError(f"negative part {x}")
            if x:
                ps.append(x)
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise PartitionError(f"parts not weakly decreasing: {tuple(ps)}")
        self._parts = tuple(ps)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((int(x) for x in parts), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``. Exponent shorthand ``"1^4"`` and ``"()"`` also work."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        parts: list[int] = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                raise PartitionError(f"empty entry in {text!r}")
            base, _, exp = tok.partition("^")
            try:
                parts.extend([int(base)] * (int(exp) if exp else 1))
            except ValueError:
                raise PartitionError(f"cannot parse part {tok!r}") from None
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return sum(self._parts)

    def multiplicities(self) -> Counter:
        return Counter(self._parts)

    def padded(self, length: int) -> list[int]:
        if length < len(self._parts):
            raise PartitionError("cannot pad to a shorter length")
        return list(self._parts) + [0] * (length - len(self._parts))

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < Partition(other)._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts})"

    def __str__(self) -> str:
        return ",".join(map(str, self._parts))


def as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return Partition.parse(p)
    return Partition(p)


def transpose(p) -> Partition:
    p = as_partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def dominates(p, q) -> bool:
    """True when every partial sum of ``p`` is at least that of ``q``."""
    p, q = as_partition(p), as_partition(q)
    if p.size != q.size:
        raise PartitionError(f"size mismatch: {p.size} vs {q.size}")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def _check_type(t: str) -> str:
    if t not in TYPES:
        raise PartitionError(f"unknown classical type {t!r}")
    return t


def type_size(t: str, n: int) -> int:
    """Size of the defining representation: n+1, 2n+1, 2n, 2n."""
    _check_type(t)
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t]


def _bad_parity(t: str) -> int | None:
    # parts of this parity must occur with even multiplicity
    return {"A": None, "B": 0, "C": 1, "D": 0}[t]


def parity_ok(t: str, p) -> bool:
    """The multiplicity condition of type ``t`` alone, ignoring the size."""
    bad = _bad_parity(_check_type(t))
    if bad is None:
        return True
    return all(m % 2 == 0 for x, m in as_partition(p).multiplicities().items() if x % 2 == bad)


def is_valid(t: str, n: int, p) -> bool:
    try:
        p = as_partition(p)
        size = type_size(t, n)
    except PartitionError:
        return False
    return n >= 0 and p.size == size and parity_ok(t, p)


def collapse(t: str, p) -> Partition:
    """Largest partition of type ``t`` dominated by ``p``.

    Greedy repair: while some part q has the wrong parity and odd
    multiplicity, lower the last copy of the largest such q by one and put
    the box on the first later row shorter than q - 1.
    """
    _check_type(t)
    p = as_partition(p)
    if t == "A":
        return p
    if t == "B" and p.size % 2 == 0 or t in "CD" and p.size % 2 == 1:
        raise PartitionError(f"type {t} needs {'odd' if t == 'B' else 'even'} size, got {p.size}")
    bad = _bad_parity(t)
    rows = list(p)
    while True:
        mult = Counter(rows)
        offenders = [x for x, m in mult.items() if x % 2 == bad and m % 2]
        if not offenders:
            return Partition(rows)
        q = max(offenders)
        i = len(rows) - 1 - rows[::-1].index(q)
        rows[i] -= 1
        rows.append(0)
        j = next(k for k in range(i + 1, len(rows)) if rows[k] < q - 1)
        rows[j] += 1
        rows = [x for x in rows if x]


def remove_box_largest(p) -> Partition:
    p = as_partition(p)
    if not p:
        raise PartitionError("cannot remove a box from the empty partition")
    return Partition.from_unsorted((p[0] - 1,) + p.parts[1:])


def add_box_largest(p) -> Partition:
    p = as_partition(p)
    if not p:
        return Partition((1,))
    return Partition((p[0] + 1,) + p.parts[1:])


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(k, cap):
        if k == 0:
            yield ()
            return
        for first in range(min(k, cap), 0, -1):
            for rest in rec(k - first, first):
                yield (first,) + rest

    for parts in rec(n, n if largest is None else largest):
        yield Partition(parts)


def brute_force_collapse(t: str, p) -> Partition:
    """Collapse straight from the definition; used as a test oracle."""
    p = as_partition(p)
    below = [q for q in partitions_of(p.size) if parity_ok(t, q) and dominates(p, q)]
    tops = [q for q in below if all(dominates(q, r) for r in below)]
    if len(tops) != 1:
        raise PartitionError(f"no unique maximum below {p} for type {t}")
    return tops[0]
