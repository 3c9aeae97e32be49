"""Verification sweeps and multiplicity audits. Every check returns a Report."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..orbits import (
    LeviShape,
    OrbitDescriptor,
    bv_dual,
    check_staging,
    closure_leq,
    enumerate_orbits,
    induce_general,
    is_special,
    orbit,
)
from ..partitions import (
    Partition,
    as_partition,
    brute_force_collapse,
    collapse,
    dominates,
    parity_ok,
    partitions_of,
    transpose,
)
from ..weights import (
    branch_to_levi,
    dominant_weights,
    root_system,
    trivial_multiplicity,
)
from .oracle import OracleConfig, graded_decomposition


class Unsupported(ValueError):
    pass


def _w(v) -> list[str]:
    return [str(Fraction(x)) for x in v]


@dataclass
class Report:
    case: str
    status: str  # "pass", "fail" or "info"
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"case": self.case, "status": self.status, "witness": self.witness, **self.details}


# combinatorial sweeps -------------------------------------------------------


def check_collapse(t: str, size: int) -> Report:
    """Greedy collapse against the brute-force maximum for one size."""
    bad, count = [], 0
    if t == "A" or (t == "B") == (size % 2 == 1):
        for p in partitions_of(size):
            count += 1
            g = collapse(t, p)
            ok = (
                g == brute_force_collapse(t, p)
                and parity_ok(t, g)
                and dominates(p, g)
                and collapse(t, g) == g
            )
            if not ok:
                bad.append({"partition": list(p), "greedy": list(g)})
    return Report(
        f"collapse/{t}/{size}",
        "fail" if bad else "pass",
        bad[:5] or None,
        {"cases": count, "discrepancies": len(bad)},
    )


def check_stage_independence(t: str, n: int, bound: int) -> Report:
    """All bases of rank <= n and block multisets with sum <= bound whose
    induced rank stays <= n: staged inductions agree with one-shot."""
    bad, count = [], 0
    for r0 in range(0, n + 1):
        for base in enumerate_orbits(t, r0):
            for total in range(1, min(bound, n - r0) + 1):
                for blocks in partitions_of(total):
                    count += 1
                    if not check_staging(t, r0 + total, base, list(blocks)):
                        bad.append({"base": base.to_json(), "blocks": list(blocks)})
    return Report(
        f"stage-independence/{t}/{n}/{bound}",
        "fail" if bad else "pass",
        bad[:5] or None,
        {"cases": count, "discrepancies": len(bad)},
    )


def check_duality(t: str, n: int) -> Report:
    """bv_dual is an order-reversing bijection between special orbits, and
    always lands on a special orbit. The square is recorded, not required."""
    src = enumerate_orbits(t, n)
    dual_type = {"B": "C", "C": "B"}.get(t, t)
    specials = [o for o in src if is_special(o)]
    target = [o for o in enumerate_orbits(dual_type, n) if is_special(o)]
    image = {o: bv_dual(o) for o in specials}
    problems = []
    for o in src:
        d = bv_dual(o)
        if not is_special(d):
            problems.append({"orbit": o.to_json(), "issue": "dual not special", "dual": d.to_json()})
    if sorted(image.values()) != sorted(target):
        problems.append({"issue": "not a bijection onto specials", "image": sorted(str(x) for x in image.values())})
    for a in specials:
        for b in specials:
            if closure_leq(a, b) != closure_leq(image[b], image[a]):
                problems.append({"issue": "order not reversed", "pair": [str(a), str(b)]})
    square = {str(o): str(bv_dual(image[o])) for o in specials}
    non_identity = {k: v for k, v in square.items() if k != v}
    return Report(
        f"duality/{t}/{n}",
        "fail" if problems else "pass",
        problems[:5] or None,
        {
            "specials": len(specials),
            "orbits": len(src),
            "square_is_identity": not non_identity,
            "square_exceptions": non_identity,
        },
    )


# Richardson equality in type A -------------------------------------------


def _min_degree(mu) -> int:
    # a root moves each coordinate by at most 1 and has l1 norm at most 2
    xs = [abs(Fraction(x)) for x in mu]
    return int(max(-(-sum(xs) // 2), max(xs, default=0)))


def _oracle_multiplicities(o: OrbitDescriptor, cfg: OracleConfig):
    graded = graded_decomposition(o, cfg)
    per_mu: dict = {}
    for dd in graded:
        for hw, m in dd.decomposition:
            per_mu.setdefault(hw, {})[dd.degree] = m
    return graded, per_mu


def check_richardson_typeA(o: OrbitDescriptor, weight_bound: int = 200, cfg: OracleConfig | None = None) -> Report:
    """[mu : Ind_P^G triv] against the oracle-graded multiplicity of mu.

    P has the Levi given by the dual partition. Weights that cannot occur
    below degree D + 1 are listed as out of reach rather than compared.
    """
    if o.type != "A" or o.rank + 1 > 3:
        raise Unsupported("Richardson check covers gl(n) with n <= 3")
    cfg = cfg or OracleConfig(degree=3)
    rs = root_system("A", o.rank)
    levi = LeviShape(tuple(transpose(o.partition)))
    graded, per_mu = _oracle_multiplicities(o, cfg)
    rows, bad, short, skipped = [], [], [], []
    for mu in dominant_weights(rs, weight_bound):
        if _min_degree(mu) > cfg.degree:
            skipped.append(_w(mu))
            continue
        lhs = trivial_multiplicity(rs, mu, levi)
        by_deg = per_mu.get(mu, {})
        rhs = sum(by_deg.values())
        row = {"mu": _w(mu), "induced": lhs, "oracle": rhs, "degrees": {str(k): v for k, v in sorted(by_deg.items())}}
        rows.append(row)
        if rhs > lhs:
            bad.append(row)
        elif rhs < lhs:
            # more copies may sit above degree D
            short.append(row)
    status = "fail" if bad else "inconclusive" if short else "pass"
    return Report(
        f"richardson/{o}",
        status,
        (bad + short) or None,
        {
            "levi": list(levi.gl_blocks),
            "degree": cfg.degree,
            "compared": rows,
            "beyond_degree": skipped,
            "hilbert": [dd.dimension for dd in graded],
        },
    )


# induction inequality ---------------------------------------------------------


@dataclass(frozen=True)
class InductionData:
    """gl orbits on the blocks of a Levi plus a residual base orbit."""

    type: str
    rank: int
    gl_orbits: tuple
    base: OrbitDescriptor | None = None
    psi: str = "trivial"

    @property
    def levi(self) -> LeviShape:
        res = self.base.rank if self.base is not None else 0
        return LeviShape(tuple(sum(g) for g in self.gl_orbits), res)

    def induced(self) -> OrbitDescriptor:
        return induce_general(self.type, self.rank, self.base, [as_partition(g) for g in self.gl_orbits])


def _lhs(rs, mu, data: InductionData, levi: LeviShape) -> int:
    """[mu|_M : R(O_m)] with R(O_m) the tensor product of the type A
    Richardson modules on each block (trivial on the residual factor)."""
    total = 0
    ordered = sorted((as_partition(g) for g in data.gl_orbits), key=lambda g: -g.size)
    for sigma, c in branch_to_levi(rs, mu, levi):
        if data.type != "A" and any(x != 0 for x in sigma[sum(levi.gl_blocks):]):
            continue
        k, start = 1, 0
        for g in ordered:
            size = g.size
            part = sigma[start : start + size]
            start += size
            grs = root_system("A", size - 1)
            k *= trivial_multiplicity(grs, part, LeviShape(tuple(transpose(g))))
            if not k:
                break
        total += c * k
    return total


def check_prop55(data: InductionData, weight_bound: int = 200, cfg: OracleConfig | None = None) -> Report:
    """LHS = [mu|_M : R(O_m)] against RHS = [mu : R(O)] for O induced.

    Type A: RHS is exact (Richardson over the dual-partition Levi) and the
    report also says whether every row is an equality. Other types: RHS is
    the oracle's partial sum through degree D, a lower bound, and the
    result is informational.
    """
    if data.psi != "trivial":
        raise Unsupported("only trivial psi is supported")
    t, n = data.type, data.rank
    if t != "A":
        if data.base is None or data.base.partition.size != len(data.base.partition):
            raise Unsupported("outside type A the residual orbit must be zero")
    O = data.induced()
    rs = root_system(t, n)
    levi = data.levi
    rows, bad = [], []
    if t == "A":
        big = LeviShape(tuple(transpose(O.partition)))
        for mu in dominant_weights(rs, weight_bound):
            lhs = _lhs(rs, mu, data, levi)
            rhs = trivial_multiplicity(rs, mu, big)
            row = {"mu": _w(mu), "lhs": lhs, "rhs": rhs}
            rows.append(row)
            if lhs > rhs:
                bad.append(row)
        return Report(
            f"prop55/{O}/exact",
            "fail" if bad else "pass",
            bad or None,
            {
                "orbit": O.to_json(),
                "levi": levi.to_json(),
                "rows": rows,
                "all_equal": all(r["lhs"] == r["rhs"] for r in rows),
            },
        )
    cfg = cfg or OracleConfig(degree=3)
    _, per_mu = _oracle_multiplicities(O, cfg)
    skipped = []
    for mu in dominant_weights(rs, weight_bound):
        if _min_degree(mu) > cfg.degree:
            skipped.append(_w(mu))
            continue
        lhs = _lhs(rs, mu, data, levi)
        rhs = sum(per_mu.get(mu, {}).values())
        row = {"mu": _w(mu), "lhs": lhs, "partial_rhs": rhs}
        rows.append(row)
        if lhs > rhs:
            bad.append(row)
    return Report(
        f"prop55/{O}/numeric",
        "info",
        bad or None,
        {
            "orbit": O.to_json(),
            "levi": levi.to_json(),
            "degree": cfg.degree,
            "rows": rows,
            "beyond_degree": skipped,
            "bound_holds": not bad,
        },
    )


def typeA_induction_data(n: int):
    """Every proper Levi of gl(n+1) with every choice of block orbits."""
    from itertools import product as _product

    for blocks in partitions_of(n + 1):
        if len(blocks) < 2:
            continue
        for gl in _product(*(list(partitions_of(k)) for k in blocks)):
            yield InductionData("A", n, tuple(tuple(g) for g in gl))


def sweep_prop55_typeA(max_rank: int, weight_bound: int = 200) -> Report:
    cases, failures, unequal = 0, [], []
    for n in range(1, max_rank + 1):
        for data in typeA_induction_data(n):
            rep = check_prop55(data, weight_bound)
            cases += 1
            if not rep.passed:
                failures.append(rep.case)
            elif not rep.details["all_equal"]:
                unequal.append(rep.case)
    return Report(
        f"prop55-sweep/A/{max_rank}",
        "fail" if failures or unequal else "pass",
        (failures + unequal) or None,
        {"cases": cases, "inequality_failures": len(failures), "strict": len(unequal)},
    )
