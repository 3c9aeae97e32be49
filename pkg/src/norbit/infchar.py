"""Infinitesimal characters attached to nilpotent orbits.

Special orbits whose dual is even get half the neutral element of the dual
orbit. Every orbit also has a column-pairing recipe read off the transposed
partition; it is authoritative only off the even-dual domain. Triangular
orbits are induced from the trivial orbit of a known Levi, and where the
rho of that Levi disagrees with the even-dual value (type D, m >= 2) the
Levi value is used unless ``precedence="even-dual"`` is requested.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .orbits import (
    OrbitDescriptor,
    bv_dual,
    dynkin_h,
    enumerate_orbits,
    is_even,
    is_special,
    is_stably_trivial,
    is_triangular,
    orbit,
    triangular_levi,
)
from .partitions import Partition, transpose

PAIRING_MODES = ("matched", "literal", "rho-gl")
# "triangular": even-dual rule, then recipe, except that a triangular orbit
# whose Levi rho differs from the even-dual value takes the Levi rho.
# "even-dual": even-dual rule, then recipe, with no override.
PRECEDENCES = ("triangular", "even-dual")
HALF = Fraction(1, 2)


class InfCharError(ValueError):
    pass


class RecipeError(InfCharError):
    """The column pattern left after removals has the wrong parities."""

    def __init__(self, message: str, columns):
        super().__init__(f"{message}: columns {list(columns)}")
        self.columns = list(columns)


def fmt(x: Fraction) -> str:
    return str(Fraction(x))


def dominant_form(t: str, entries) -> tuple[Fraction, ...]:
    """Dominant Weyl-group representative.

    A: sorted descending. B, C: absolute values sorted descending.
    D: the same, with the smallest entry negative when an odd number of
    entries are negative and none is zero.
    """
    xs = [Fraction(x) for x in entries]
    if t == "A":
        return tuple(sorted(xs, reverse=True))
    out = sorted((abs(x) for x in xs), reverse=True)
    if t == "D" and out and sign_parity(t, xs):
        out[-1] = -out[-1]
    return tuple(out)


def sign_parity(t: str, entries) -> bool | None:
    """For type D with no zero entry: True when the count of negatives is odd."""
    xs = [Fraction(x) for x in entries]
    if t != "D" or any(x == 0 for x in xs):
        return None
    return sum(1 for x in xs if x < 0) % 2 == 1


@dataclass(frozen=True)
class InfChar:
    type: str
    rank: int
    entries: tuple[Fraction, ...]
    rule: str = ""
    trace: dict | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        xs = tuple(Fraction(x) for x in self.entries)
        if any(x.denominator > 2 for x in xs):
            raise InfCharError(f"entries must have denominator 1 or 2: {xs}")
        expected = self.rank + 1 if self.type == "A" else self.rank
        if len(xs) != expected:
            raise InfCharError(f"expected {expected} entries, got {len(xs)}")
        object.__setattr__(self, "entries", xs)

    @property
    def canonical(self) -> tuple[Fraction, ...]:
        if self.type == "A":
            return tuple(sorted(self.entries, reverse=True))
        return tuple(sorted((abs(x) for x in self.entries), reverse=True))

    @property
    def d_sign_parity(self) -> bool | None:
        return sign_parity(self.type, self.entries)

    @property
    def dominant(self) -> tuple[Fraction, ...]:
        return dominant_form(self.type, self.entries)

    def to_json(self, with_trace: bool = False) -> dict:
        d = {
            "type": self.type,
            "rank": self.rank,
            "lambda": [fmt(x) for x in self.dominant],
            "entries": [fmt(x) for x in self.entries],
            "rule": self.rule,
            "d_sign_parity": self.d_sign_parity,
        }
        if with_trace and self.trace is not None:
            d["trace"] = self.trace
        return d

    def __str__(self) -> str:
        return "(" + ", ".join(fmt(x) for x in self.dominant) + ")"


def rho_gl(k: int) -> tuple[Fraction, ...]:
    """((k-1)/2, ..., -(k-1)/2); empty for k = 0."""
    return tuple(Fraction(k - 1, 2) - j for j in range(k))


def rho_entries(t: str, n: int) -> tuple[Fraction, ...]:
    if t == "A":
        return rho_gl(n + 1)
    if t == "B":
        return tuple(Fraction(2 * j - 1, 2) for j in range(n, 0, -1))
    if t == "C":
        return tuple(Fraction(j) for j in range(n, 0, -1))
    if t == "D":
        return tuple(Fraction(j) for j in range(n - 1, -1, -1))
    raise InfCharError(f"unknown type {t!r}")


def rho(t: str, n: int) -> InfChar:
    return InfChar(t, n, rho_entries(t, n), "rho")


def _run(start: Fraction, stop: Fraction) -> list[Fraction]:
    """start, start-1, ..., down to stop inclusive; empty if start < stop."""
    out, x = [], Fraction(start)
    while x >= stop:
        out.append(x)
        x -= 1
    return out


def _pair(a: int, b: int) -> list[Fraction]:
    return _run(Fraction(a, 2), Fraction(-(b - 2), 2))


def _wants_half(t: str) -> bool:
    return t == "B"


def _equal_pair(t: str, a: int, mode: str, leading_c: bool) -> tuple[list[Fraction], str]:
    shown = _pair(a, a)
    if mode == "literal" or (mode == "rho-gl" and leading_c):
        return shown, "displayed"
    if mode == "rho-gl":
        return list(rho_gl(a)), "rho_gl"
    # keep the displayed string when its integrality matches the type
    half = any(x.denominator == 2 for x in shown)
    if half == _wants_half(t):
        return shown, "displayed"
    return list(rho_gl(a)), "rho_gl"


def recipe_trace(o: OrbitDescriptor, pairing_mode: str = "matched") -> dict:
    """Run the column-pairing recipe and return the full trace.

    The trace records the padded columns, each straddling pair removed
    (with its original positions), the pattern of what remains, and every
    contribution. ``entries`` holds the concatenated result.
    """
    if pairing_mode not in PAIRING_MODES:
        raise InfCharError(f"unknown pairing mode {pairing_mode!r}")
    t = o.type
    cols = list(transpose(o.partition))
    trace: dict = {"orbit": str(o), "columns": list(cols), "pairing_mode": pairing_mode}
    out: list[Fraction] = []
    steps: list[dict] = []

    if t == "A":
        for m in cols:
            c = rho_gl(m)
            out += c
            steps.append({"kind": "column", "columns": [m], "contribution": [fmt(x) for x in c]})
        trace.update(padded=cols, removals=[], pattern=steps, entries=out)
        return trace

    want_odd = t in "BC"
    if (len(cols) % 2 == 1) != want_odd:
        cols.append(0)
    trace["padded"] = list(cols)

    idx = list(range(len(cols)))
    m = list(cols)
    removals = []
    i = 1 if t == "C" else 0
    while i + 1 < len(m):
        if m[i] == m[i + 1] and m[i] > 0:
            c = rho_gl(m[i])
            out += c
            removals.append({
                "value": m[i],
                "positions": [idx[i], idx[i + 1]],
                "contribution": [fmt(x) for x in c],
            })
            del m[i : i + 2], idx[i : i + 2]
        else:
            i += 2
    trace["removals"] = removals
    trace["remaining"] = list(m)

    def push(kind, columns, contrib, how=None):
        out.extend(contrib)
        step = {"kind": kind, "columns": list(columns), "contribution": [fmt(x) for x in contrib]}
        if how:
            step["formula"] = how
        steps.append(step)

    def pairs(seq, leading_c=False):
        for k in range(0, len(seq), 2):
            a, b = seq[k], seq[k + 1]
            if (a - b) % 2:
                raise RecipeError(f"pair ({a},{b}) has unlike parity", m)
            if a == b:
                c, how = _equal_pair(t, a, pairing_mode, leading_c and k == 0)
            else:
                c, how = _pair(a, b), "displayed"
            push("pair", (a, b), c, how)

    if t == "B":
        m0 = m[0]
        if m0 % 2 == 0:
            raise RecipeError(f"leading singleton {m0} is even", m)
        push("singleton", (m0,), _run(Fraction(m0 - 2, 2), HALF))
        pairs(m[1:])
    elif t == "C":
        last = m[-1]
        if last % 2:
            raise RecipeError(f"trailing singleton {last} is odd", m)
        pairs(m[:-1], leading_c=True)
        push("singleton", (last,), _run(Fraction(last, 2), Fraction(1)))
    elif m:
        a, b = m[0], m[-1]
        if (a - b) % 2:
            raise RecipeError(f"wrap pair ({a},{b}) has unlike parity", m)
        push("wrap", (a, b), _run(Fraction(a - 2, 2), Fraction(-b, 2)))
        pairs(m[1:-1])

    if o.label == "II":
        # the other class of Levi: flip one sign
        out[-1] = -out[-1]
        trace["label_flip"] = True
    trace["pattern"] = steps
    trace["entries"] = out
    if len(out) != o.rank:
        raise RecipeError(f"recipe produced {len(out)} entries for rank {o.rank}", cols)
    return trace


def recipe_infchar(o: OrbitDescriptor, pairing_mode: str = "matched") -> InfChar:
    tr = recipe_trace(o, pairing_mode)
    entries = tr.pop("entries")
    tr["entries"] = [fmt(x) for x in entries]
    return InfChar(o.type, o.rank, tuple(entries), "recipe", tr)


def even_dual_domain(o: OrbitDescriptor) -> str | None:
    """None when the even-dual rule applies, else the reason it does not."""
    if not is_special(o):
        return f"{o} is not special"
    d = bv_dual(o)
    if not is_even(d):
        return f"dual orbit {d} is not even"
    return None


def even_dual_infchar(o: OrbitDescriptor) -> InfChar:
    why = even_dual_domain(o)
    if why:
        raise InfCharError(why)
    d = bv_dual(o)
    h = dynkin_h(d)
    tr = {"orbit": str(o), "dual": str(d), "h": list(h)}
    return InfChar(o.type, o.rank, tuple(Fraction(x, 2) for x in h), "even-dual", tr)


def triangular_infchar(o: OrbitDescriptor) -> InfChar:
    """rho of the triangular Levi: the character of the representation
    induced from the trivial one on that Levi."""
    if not is_triangular(o):
        raise InfCharError(f"{o} is not triangular")
    lv = triangular_levi(o)
    tr = {"orbit": str(o), "gl_blocks": list(lv.gl_blocks), "residual_rank": lv.residual_rank}
    return InfChar(o.type, o.rank, levi_rho(o.type, lv.gl_blocks, lv.residual_rank), "triangular-levi", tr)


def infchar(o: OrbitDescriptor, pairing_mode: str = "matched", precedence: str = "triangular") -> InfChar:
    if precedence not in PRECEDENCES:
        raise InfCharError(f"unknown precedence {precedence!r}")
    ed = even_dual_infchar(o) if even_dual_domain(o) is None else None
    lam = ed
    if precedence == "triangular" and is_triangular(o):
        tri = triangular_infchar(o)
        if ed is None or not infchar_equal(o.type, tri, ed):
            lam = tri
    if lam is None:
        return recipe_infchar(o, pairing_mode)
    try:
        lam.trace["recipe"] = recipe_trace_json(o, pairing_mode)
    except RecipeError as exc:
        lam.trace["recipe"] = {"error": str(exc)}
    return lam


def recipe_trace_json(o: OrbitDescriptor, pairing_mode: str = "matched") -> dict:
    tr = recipe_trace(o, pairing_mode)
    tr["entries"] = [fmt(x) for x in tr["entries"]]
    return tr


def _entries(x) -> tuple:
    return x.entries if isinstance(x, InfChar) else tuple(Fraction(v) for v in x)


def infchar_equal(t: str, a, b) -> bool:
    """Equality up to the Weyl group of type ``t``."""
    ea, eb = _entries(a), _entries(b)
    if len(ea) != len(eb):
        raise InfCharError(f"rank mismatch: {len(ea)} vs {len(eb)}")
    return dominant_form(t, ea) == dominant_form(t, eb)


def levi_rho(t: str, blocks, residual_rank: int) -> tuple[Fraction, ...]:
    """rho of gl(k_1) x ... x g(residual); the obvious infinitesimal character
    of the trivial representation of the Levi."""
    out: list[Fraction] = []
    for k in blocks:
        out += rho_gl(k)
    if t != "A":
        out += rho_entries(t, residual_rank)
    return tuple(out)


# consistency audit -----------------------------------------------------------

KNOWN_EXCEPTIONS: frozenset = frozenset()


def _base_from_columns(t: str, cols) -> OrbitDescriptor:
    p = transpose(Partition(sorted((c for c in cols if c), reverse=True)))
    if t == "B" and not p:
        p = Partition((1,))
    size = p.size
    n = (size - 1) // 2 if t == "B" else size // 2
    return orbit(t, n, p, "I" if (t == "D" and p and all(x % 2 == 0 for x in p)) else None)


@dataclass
class ConsistencyReport:
    type: str
    rank: int
    pairing_mode: str
    precedence: str = "triangular"
    rows: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def unexcused(self) -> list:
        return [d for d in self.discrepancies if d["key"] not in KNOWN_EXCEPTIONS]

    @property
    def ok(self) -> bool:
        return not self.unexcused

    def to_json(self) -> dict:
        def plain(d):
            return {**d, "key": list(d["key"])}

        return {
            "case": f"consistency/{self.type}{self.rank}",
            "status": "pass" if self.ok else "fail",
            "witness": [plain(d) for d in self.unexcused] or None,
            "pairing_mode": self.pairing_mode,
            "precedence": self.precedence,
            "orbits": self.rows,
            "discrepancies": [plain(d) for d in self.discrepancies],
            "notes": self.notes,
        }


def consistency_report(
    t: str, n: int, pairing_mode: str = "matched", bound: int = 8, precedence: str = "triangular"
) -> ConsistencyReport:
    """Audit every orbit of (t, n): recipe against the even-dual rule, and
    the assigned character against each trivial-gl presentation the audit
    finds (straddle removals, the triangular Levi, the type A dual Levi).
    Orbits where the assigned value overrides the even-dual value are
    listed in the notes."""
    if n > bound:
        raise InfCharError(f"rank {n} exceeds audit bound {bound}")
    rep = ConsistencyReport(t, n, pairing_mode, precedence)
    if t == "D":
        rep.notes.append(
            "literal stably-trivial criterion is vacuous for valid D partitions; "
            "parity-parallel flag reported alongside"
        )

    def flag(o, kind, detail):
        rep.discrepancies.append({"key": (t, n, str(o.partition), o.label, kind), "orbit": o.to_json(), "kind": kind, **detail})

    for o in enumerate_orbits(t, n):
        lam = infchar(o, pairing_mode, precedence)
        row = {
            "orbit": o.to_json(),
            "lambda": [fmt(x) for x in lam.dominant],
            "rule": lam.rule,
            "special": is_special(o),
            "stably_trivial": is_stably_trivial(o, "literal"),
            "triangular": is_triangular(o),
            "checks": [],
        }
        if t == "D":
            row["stably_trivial_parity_parallel"] = is_stably_trivial(o, "parity-parallel")
        try:
            rec = recipe_infchar(o, pairing_mode)
        except RecipeError as exc:
            rec = None
            flag(o, "recipe-parity", {"error": str(exc)})
        ed = even_dual_infchar(o) if even_dual_domain(o) is None else None
        if rec is not None and ed is not None:
            same = infchar_equal(t, rec, ed)
            row["checks"].append({"check": "recipe-vs-even-dual", "ok": same})
            if not same:
                flag(o, "recipe-vs-even-dual", {"recipe": [fmt(x) for x in rec.dominant], "even_dual": [fmt(x) for x in ed.dominant]})
        if ed is not None and not infchar_equal(t, ed, lam):
            rep.notes.append(
                f"{o}: {lam.rule} value ({', '.join(row['lambda'])}) overrides "
                f"even-dual value ({', '.join(fmt(x) for x in ed.dominant)})"
            )

        presentations = []
        if rec is not None and t != "A":
            padded = rec.trace["padded"]
            for r in rec.trace["removals"]:
                keep = [c for j, c in enumerate(padded) if j not in r["positions"]]
                base = _base_from_columns(t, keep)
                gl_part = list(rho_gl(r["value"]))
                if o.label == "II":
                    if base.very_even:
                        base = orbit(t, base.rank, base.partition, "II")
                    else:
                        # induced through the type II Levi class
                        gl_part[-1] = -gl_part[-1]
                presentations.append((f"gl({r['value']})+{base}", gl_part, base))
        if is_triangular(o):
            lv = triangular_levi(o)
            presentations.append((f"triangular {list(lv.gl_blocks)}+rank {lv.residual_rank}", levi_rho(t, lv.gl_blocks, lv.residual_rank), None))
        if t == "A":
            cols = list(transpose(o.partition))
            presentations.append((f"dual Levi {cols}", levi_rho("A", cols, 0), None))
        for name, gl_part, base in presentations:
            other = list(gl_part) + (list(infchar(base, pairing_mode, precedence).entries) if base is not None and base.rank else [])
            same = infchar_equal(t, lam, other)
            row["checks"].append({"check": f"induction {name}", "ok": same})
            if not same:
                flag(o, f"induction {name}", {"assigned": row["lambda"], "induced": [fmt(x) for x in dominant_form(t, other)]})
        rep.rows.append(row)
    return rep
